#include "isochron/golden_tables.hpp"

namespace isochron::golden {

// Letters by weight: (1,0) -> 1, (0,1) -> -1, (2,-1) -> 3, (-1,2) -> -3.

const MouldEntry kLength2Table[4] = {
    {"(1,0).(0,1)", "i"},
    {"(0,1).(1,0)", "-i"},
    {"(2,-1).(-1,2)", "1/3*i"},
    {"(-1,2).(2,-1)", "-1/3*i"},
};

const MouldEntry kLength4Table[44] = {
    {"(-1,2).(-1,2).(2,-1).(2,-1)", "-1/54*i"},
    {"(-1,2).(0,1).(1,0).(2,-1)", "-1/12*i"},
    {"(-1,2).(0,1).(2,-1).(1,0)", "1/12*i"},
    {"(-1,2).(1,0).(0,1).(2,-1)", "1/6*i"},
    {"(-1,2).(1,0).(1,0).(1,0)", "1/6*i"},
    {"(-1,2).(1,0).(2,-1).(0,1)", "-1/6*i"},
    {"(-1,2).(2,-1).(-1,2).(2,-1)", "1/27*i"},
    {"(-1,2).(2,-1).(0,1).(1,0)", "0"},
    {"(-1,2).(2,-1).(1,0).(0,1)", "0"},
    {"(-1,2).(2,-1).(2,-1).(-1,2)", "0"},
    {"(0,1).(-1,2).(1,0).(2,-1)", "1/12*i"},
    {"(0,1).(-1,2).(2,-1).(1,0)", "-1/12*i"},
    {"(0,1).(0,1).(0,1).(2,-1)", "1/6*i"},
    {"(0,1).(0,1).(1,0).(1,0)", "-1/2*i"},
    {"(0,1).(0,1).(2,-1).(0,1)", "-1/2*i"},
    {"(0,1).(1,0).(-1,2).(2,-1)", "0"},
    {"(0,1).(1,0).(0,1).(1,0)", "i"},
    {"(0,1).(1,0).(1,0).(0,1)", "0"},
    {"(0,1).(1,0).(2,-1).(-1,2)", "0"},
    {"(0,1).(2,-1).(-1,2).(1,0)", "-1/6*i"},
    {"(0,1).(2,-1).(0,1).(0,1)", "1/2*i"},
    {"(0,1).(2,-1).(1,0).(-1,2)", "1/6*i"},
    {"(1,0).(-1,2).(0,1).(2,-1)", "-1/6*i"},
    {"(1,0).(-1,2).(1,0).(1,0)", "-1/2*i"},
    {"(1,0).(-1,2).(2,-1).(0,1)", "1/6*i"},
    {"(1,0).(0,1).(-1,2).(2,-1)", "0"},
    {"(1,0).(0,1).(0,1).(1,0)", "0"},
    {"(1,0).(0,1).(1,0).(0,1)", "-i"},
    {"(1,0).(0,1).(2,-1).(-1,2)", "0"},
    {"(1,0).(1,0).(-1,2).(1,0)", "1/2*i"},
    {"(1,0).(1,0).(0,1).(0,1)", "1/2*i"},
    {"(1,0).(1,0).(1,0).(-1,2)", "-1/6*i"},
    {"(1,0).(2,-1).(-1,2).(0,1)", "1/12*i"},
    {"(1,0).(2,-1).(0,1).(-1,2)", "-1/12*i"},
    {"(2,-1).(-1,2).(-1,2).(2,-1)", "0"},
    {"(2,-1).(-1,2).(0,1).(1,0)", "0"},
    {"(2,-1).(-1,2).(1,0).(0,1)", "0"},
    {"(2,-1).(-1,2).(2,-1).(-1,2)", "-1/27*i"},
    {"(2,-1).(0,1).(-1,2).(1,0)", "1/6*i"},
    {"(2,-1).(0,1).(0,1).(0,1)", "-1/6*i"},
    {"(2,-1).(0,1).(1,0).(-1,2)", "-1/6*i"},
    {"(2,-1).(1,0).(-1,2).(0,1)", "-1/12*i"},
    {"(2,-1).(1,0).(0,1).(-1,2)", "1/12*i"},
    {"(2,-1).(2,-1).(-1,2).(-1,2)", "1/54*i"},
};

}  // namespace isochron::golden
