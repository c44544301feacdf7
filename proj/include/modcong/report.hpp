#ifndef MODCONG_REPORT_HPP
#define MODCONG_REPORT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace modcong {

// One pass/fail record inside a verification family.
struct CheckInstance {
    std::string desc;
    bool pass = false;
    std::vector<mpz_class> witness; // the integers behind the verdict
    mpz_class modulus = 0;          // 0 when the check is an exact equality
};

struct VerificationReport {
    std::string family;
    std::map<std::string, std::string> params;
    std::vector<CheckInstance> instances;

    std::size_t pass_count() const {
        std::size_t n = 0;
        for (const auto& i : instances) n += i.pass;
        return n;
    }
    std::size_t fail_count() const { return instances.size() - pass_count(); }
    bool all_pass() const { return fail_count() == 0; }

    nlohmann::json to_json() const {
        nlohmann::json inst = nlohmann::json::array();
        for (const auto& i : instances) {
            nlohmann::json w = nlohmann::json::array();
            for (const auto& v : i.witness) w.push_back(v.get_str());
            inst.push_back({{"desc", i.desc},
                            {"status", i.pass ? "pass" : "fail"},
                            {"witness", w},
                            {"modulus", i.modulus.get_str()}});
        }
        return {{"family", family},
                {"params", params},
                {"instances", inst},
                {"summary", {{"pass", pass_count()}, {"fail", fail_count()}}}};
    }

    void print_text(std::ostream& os, bool verbose = false) const {
        os << family;
        if (!params.empty()) {
            os << " (";
            bool first = true;
            for (const auto& [k, v] : params) {
                if (!first) os << ", ";
                os << k << "=" << v;
                first = false;
            }
            os << ")";
        }
        os << ": " << pass_count() << " pass, " << fail_count() << " fail\n";
        for (const auto& i : instances) {
            if (i.pass && !verbose) continue;
            os << "  " << (i.pass ? "pass" : "FAIL") << "  " << i.desc;
            if (!i.witness.empty()) {
                os << "  [";
                for (std::size_t k = 0; k < i.witness.size(); ++k)
                    os << (k ? ", " : "") << i.witness[k].get_str();
                os << "]";
            }
            if (i.modulus != 0) os << "  mod " << i.modulus.get_str();
            os << "\n";
        }
    }
};

} // namespace modcong

#endif
