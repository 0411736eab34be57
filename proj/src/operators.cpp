#include "isochron/operators.hpp"

#include <stdexcept>

namespace isochron {

namespace {

HomOp interior_op(int a, int b, bool raw) {
    HomOp op;
    op.letter = Letter{a, b};
    op.p = SymPoly::var(CoeffVar::p(a, b));
    op.q = raw ? SymPoly::var(CoeffVar::q(a, b)) : SymPoly::var(CoeffVar::pbar(b, a));
    return op;
}

std::vector<HomOp> component_ops(int r, bool raw) {
    std::vector<HomOp> ops;
    for (const auto& n : alphabet_of_component(r)) {
        if (n == Letter{-1, r}) {
            // B_{(-1,r)} = p_{-1,r} y^r d/dx
            ops.push_back(HomOp{n, SymPoly::var(CoeffVar::p(-1, r)), SymPoly{}});
        } else if (n == Letter{r, -1}) {
            // B_{(r,-1)} = q_{r,-1} x^r d/dy with q_{r,-1} = ~p[-1,r]
            SymPoly q = raw ? SymPoly::var(CoeffVar::q(r, -1))
                            : SymPoly::var(CoeffVar::pbar(-1, r));
            ops.push_back(HomOp{n, SymPoly{}, std::move(q)});
        } else {
            ops.push_back(interior_op(n.n1, n.n2, raw));
        }
    }
    return ops;
}

}  // namespace

std::vector<HomOp> make_operators(int r) { return component_ops(r, false); }

std::vector<HomOp> make_operators_raw(int r) { return component_ops(r, true); }

OperatorSet::OperatorSet(std::vector<HomOp> ops) {
    for (auto& op : ops) add(std::move(op));
}

void OperatorSet::add(HomOp op) {
    Letter n = op.letter;
    ops_.insert_or_assign(n, std::move(op));
}

const HomOp& OperatorSet::at(const Letter& n) const {
    auto it = ops_.find(n);
    if (it == ops_.end())
        throw std::out_of_range("OperatorSet: unknown letter " + n.str());
    return it->second;
}

BracketCoeffs bracket_coeffs(const Word& w, const OperatorSet& ops) {
    if (w.empty()) throw std::invalid_argument("bracket_coeffs: empty word");
    const HomOp& last = ops.at(w.back());
    BracketCoeffs acc{last.p, last.q, last.letter};
    for (size_t idx = w.size() - 1; idx-- > 0;) {
        const HomOp& op = ops.at(w[idx]);
        const int n1 = op.letter.n1;
        const int n2 = op.letter.n2;
        const int t1 = acc.total.n1;
        const int t2 = acc.total.n2;
        SymPoly np = GaussRat(t1 - n1) * (op.p * acc.p) + GaussRat(t2) * (op.q * acc.p) -
                     GaussRat(n2) * (op.p * acc.q);
        SymPoly nq = GaussRat(t2 - n2) * (op.q * acc.q) + GaussRat(t1) * (op.p * acc.q) -
                     GaussRat(n1) * (op.q * acc.p);
        acc.p = std::move(np);
        acc.q = std::move(nq);
        acc.total = Letter{t1 + n1, t2 + n2};
    }
    return acc;
}

ApplyResult op_apply(const HomOp& op, int l, int k) {
    ApplyResult r;
    r.scalar = GaussRat(l) * op.p + GaussRat(k) * op.q;
    r.l = op.letter.n1 + l;
    r.k = op.letter.n2 + k;
    return r;
}

ApplyResult compose_apply(const Word& w, const OperatorSet& ops, int l, int k) {
    ApplyResult acc{SymPoly::constant(GaussRat(1)), l, k};
    for (size_t idx = w.size(); idx-- > 0;) {
        const HomOp& op = ops.at(w[idx]);
        ApplyResult step = op_apply(op, acc.l, acc.k);
        acc.scalar = acc.scalar * step.scalar;
        acc.l = step.l;
        acc.k = step.k;
    }
    return acc;
}

}  // namespace isochron

