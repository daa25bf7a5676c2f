#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "expsum/theorems.hpp"

namespace expsum {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    os << "theorem,n,seed,lhs,rhs,margin,status\n";
    for (const CheckReport& r : reports) {
        os << to_string(r.theorem) << ',' << r.n << ',' << r.seed << ',' << fmt17(r.lhs)
           << ',' << fmt17(r.rhs) << ',' << fmt17(r.margin) << ',' << to_string(r.status)
           << '\n';
    }
    return os.str();
}

std::string to_json_text(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : reports) {
        arr.push_back({{"theorem", to_string(r.theorem)},
                       {"n", r.n},
                       {"seed", r.seed},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"margin", r.margin},
                       {"status", to_string(r.status)}});
    }
    return arr.dump(2);
}

}  // namespace expsum
