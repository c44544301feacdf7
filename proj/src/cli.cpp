#include "modcong/cli.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcong/cache.hpp"
#include "modcong/congruence.hpp"
#include "modcong/forms.hpp"
#include "modcong/sequences.hpp"

namespace modcong::cli {

namespace {

std::string render_series_text(const PowerSeries& f, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.precision(); ++i) {
        const Int& c = f.coefficients()[i];
        if (c == 0) continue;
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << f.precision() << ")";
    return os.str();
}

std::string render_series_csv(const PowerSeries& f) {
    std::size_t v = valuation(f);
    if (v == f.precision()) return "0";
    std::ostringstream os;
    for (std::size_t i = v; i < f.precision(); ++i) {
        if (i > v) os << ",";
        os << f.coefficients()[i].get_str();
    }
    return os.str();
}

nlohmann::json series_json(const std::string& name, std::optional<unsigned> n,
                           const PowerSeries& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& c : f.coefficients()) coeffs.push_back(c.get_str());
    nlohmann::json j = {
        {"name", name},
        {"n", n ? nlohmann::json(*n) : nlohmann::json(nullptr)},
        {"prec", f.precision()},
        {"coeffs", coeffs},
    };
    if (f.modulus()) j["modulus"] = f.modulus()->get_str();
    return j;
}

// Sequence identifiers accepted next to form names: A:<k>, B:<n>, C:<n>,
// D3, aperyB.
std::optional<SequenceTable> try_sequence(const std::string& name, std::size_t terms) {
    auto parse_index = [&](const std::string& tail) -> unsigned {
        std::size_t used = 0;
        long v = std::stol(tail, &used);
        if (used != tail.size() || v < 1) throw BadParameter("bad sequence index in '" + name + "'");
        return static_cast<unsigned>(v);
    };
    if (name.rfind("A:", 0) == 0) return A_k_table(parse_index(name.substr(2)), terms);
    if (name.rfind("B:", 0) == 0) return B_C_tables(parse_index(name.substr(2)), terms).first;
    if (name.rfind("C:", 0) == 0) return B_C_tables(parse_index(name.substr(2)), terms).second;
    if (name == "D3") return D3_table(terms);
    if (name == "aperyB") return apery_B_table(terms);
    return std::nullopt;
}

struct VerifyOptions {
    std::string family;
    unsigned long prime_min = 0;   // 0 = family default
    unsigned long prime_max = 0;   // 0 = family default
    std::optional<unsigned> n;
    unsigned long m_max = 0;       // 0 = family default
    unsigned r_max = 0;            // 0 = family default
    std::string terms = "auto";    // identity families only
    bool under_all = false;
};

std::size_t identity_terms(const VerifyOptions& o) {
    if (o.terms == "auto" || o.terms.empty()) return 200;
    long v = 0;
    try {
        std::size_t used = 0;
        v = std::stol(o.terms, &used);
        if (used != o.terms.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw BadParameter("--terms must be a positive integer or 'auto'");
    }
    if (v < 8) throw BadParameter("identity checks need at least 8 terms");
    return static_cast<std::size_t>(v);
}

unsigned long pick(unsigned long requested, unsigned long fallback) {
    return requested ? requested : fallback;
}

std::vector<VerificationReport> dispatch_family(const VerifyOptions& o) {
    std::vector<VerificationReport> reports;
    const std::string& fam = o.family;

    if (fam.rfind("identity.", 0) == 0) {
        IdentityName id = parse_identity_name(fam.substr(9));
        reports.push_back(verify_identity(id, identity_terms(o)));
        return reports;
    }
    if (fam == "theorem1") {
        unsigned long bound = pick(o.prime_max, o.under_all ? 300 : 500);
        if (o.n) {
            reports.push_back(verify_theorem1(*o.n, bound));
        } else {
            for (unsigned n = 1; n <= 4; ++n)
                reports.push_back(verify_theorem1(n, bound));
        }
        return reports;
    }
    if (fam == "theorem2a") {
        reports.push_back(verify_theorem2(Theorem2Part::a,
                                          pick(o.prime_max, o.under_all ? 300 : 1000)));
        return reports;
    }
    if (fam == "theorem2b") {
        reports.push_back(verify_theorem2(Theorem2Part::b, pick(o.prime_max, 300)));
        return reports;
    }
    if (fam == "theorem2c") {
        unsigned long bound = pick(o.prime_max, 300);
        if (o.n) {
            reports.push_back(verify_theorem2(Theorem2Part::c, bound, *o.n));
        } else {
            for (unsigned n = 2; n <= 4; ++n)
                reports.push_back(verify_theorem2(Theorem2Part::c, bound, n));
        }
        return reports;
    }
    if (fam.rfind("cor1.", 0) == 0) {
        std::string rel = fam.substr(5);
        if (rel == "eq3" || rel == "eq4") {
            unsigned long bound = pick(o.prime_max, 50);
            if (o.under_all) bound = std::min<unsigned long>(bound, 50);
            reports.push_back(verify_cor1(rel == "eq3" ? Cor1Relation::eq3 : Cor1Relation::eq4,
                                          bound, pick(o.m_max, 5), o.r_max ? o.r_max : 2));
        } else if (rel == "eq1" || rel == "eq2") {
            reports.push_back(verify_cor1(rel == "eq1" ? Cor1Relation::eq1 : Cor1Relation::eq2,
                                          pick(o.prime_max, 300), 1, 1));
        } else {
            throw BadParameter("unknown corollary-1 relation '" + rel + "'");
        }
        return reports;
    }
    if (fam == "cor2") {
        unsigned long bound = pick(o.prime_max, 300);
        if (o.n) {
            reports.push_back(verify_cor2(*o.n, bound));
        } else {
            for (unsigned n = 1; n <= 4; ++n)
                reports.push_back(verify_cor2(n, bound));
        }
        return reports;
    }
    if (fam == "example") {
        reports.push_back(verify_example(pick(o.prime_max, o.under_all ? 300 : 1000)));
        return reports;
    }
    if (fam == "intro-apery") {
        unsigned long bound = pick(o.prime_max, 100);
        if (o.under_all) bound = std::min<unsigned long>(bound, 100);
        reports.push_back(verify_intro_apery(bound, pick(o.m_max, 3),
                                             o.r_max ? o.r_max : 2));
        return reports;
    }
    if (fam == "all") {
        VerifyOptions sub = o;
        sub.under_all = true;
        if (!o.prime_max) sub.prime_max = 300;
        for (const std::string& id : identity_names()) {
            VerifyOptions io = sub;
            io.family = "identity." + id;
            auto r = dispatch_family(io);
            reports.insert(reports.end(), r.begin(), r.end());
        }
        for (const char* f :
             {"theorem1", "theorem2a", "theorem2b", "theorem2c", "cor1.eq3",
              "cor1.eq4", "cor1.eq1", "cor1.eq2", "cor2", "example", "intro-apery"}) {
            VerifyOptions fo = sub;
            fo.family = f;
            auto r = dispatch_family(fo);
            reports.insert(reports.end(), r.begin(), r.end());
        }
        return reports;
    }
    throw BadParameter("unknown family '" + fam + "'");
}

// Drop report instances for primes below the requested minimum.  The
// verifiers scan from their natural lower end; this implements --prime-min.
void apply_prime_min(std::vector<VerificationReport>& reports, unsigned long lo) {
    if (lo == 0) return;
    for (auto& rep : reports) {
        rep.params["prime_min"] = std::to_string(lo);
        std::vector<CheckInstance> kept;
        for (auto& inst : rep.instances) {
            // instance descriptions embed the prime as "(p)" or "p=<p>"
            unsigned long p = 0;
            auto pos = inst.desc.find("p=");
            if (pos != std::string::npos) {
                p = std::strtoul(inst.desc.c_str() + pos + 2, nullptr, 10);
            } else if ((pos = inst.desc.find('(')) != std::string::npos) {
                p = std::strtoul(inst.desc.c_str() + pos + 1, nullptr, 10);
            }
            if (p == 0 || p >= lo) kept.push_back(std::move(inst));
        }
        rep.instances = std::move(kept);
    }
}

int emit_reports(const std::vector<VerificationReport>& reports,
                 const std::string& format, bool verbose, std::ostream& out) {
    std::size_t pass = 0, fail = 0;
    for (const auto& r : reports) {
        pass += r.pass_count();
        fail += r.fail_count();
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        out << arr.dump(1) << "\n";
    } else {
        for (const auto& r : reports) r.print_text(out, verbose);
        out << "total: " << pass << " pass, " << fail << " fail\n";
    }
    return fail == 0 ? 0 : 1;
}

int run_expand(const std::string& name, std::size_t terms,
               std::optional<Int> mod, const std::string& format,
               std::ostream& out) {
    if (auto seq = try_sequence(name, terms)) {
        if (mod)
            for (Int& v : seq->values) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod->get_mpz_t());
        if (format == "json") {
            nlohmann::json vals = nlohmann::json::array();
            for (const Int& v : seq->values) vals.push_back(v.get_str());
            nlohmann::json j = {{"name", name},
                                {"offset", seq->offset},
                                {"length", seq->values.size()},
                                {"values", vals}};
            if (mod) j["modulus"] = mod->get_str();
            out << j.dump(1) << "\n";
        } else if (format == "csv") {
            for (std::size_t i = 0; i < seq->values.size(); ++i)
                out << (i ? "," : "") << seq->values[i].get_str();
            out << "\n";
        } else {
            out << seq->name << ":";
            for (const Int& v : seq->values) out << " " << v.get_str();
            out << "\n";
        }
        return 0;
    }
    FormSpec spec = parse_form_spec(name);
    PowerSeries f = build_form(spec, terms);
    if (mod) f = reduce_mod(f, *mod);
    if (format == "json") {
        out << series_json(form_spec_text(spec), spec.n, f).dump(1) << "\n";
    } else if (format == "csv") {
        out << render_series_csv(f) << "\n";
    } else {
        out << render_series_text(f, "q") << "\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-expansions, hypergeometric tables and congruence checks"};
    app.require_subcommand(1);

    // expand
    auto* expand = app.add_subcommand("expand", "print a form or sequence expansion");
    std::string ex_form;
    long ex_terms = 0;
    std::string ex_mod;
    std::string ex_format = "text";
    expand->add_option("--form", ex_form,
                       "form (theta, lambda, one16l, f1, g1, psi, nu, h:<n>, f:<n>, "
                       "eis1, apery-eta) or sequence (A:<k>, B:<n>, C:<n>, D3, aperyB)")
        ->required();
    expand->add_option("--terms", ex_terms, "number of coefficients")->required();
    expand->add_option("--mod", ex_mod, "reduce coefficients modulo M");
    expand->add_option("--format", ex_format, "text (default), csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification family");
    VerifyOptions vo;
    std::string vf_format = "text";
    bool vf_verbose = false;
    unsigned long vf_n = 0;
    verify->add_option("family", vo.family,
                       "identity.<id>, theorem1, theorem2a/b/c, cor1.eq1..eq4, cor2, "
                       "example, intro-apery, all")
        ->required();
    verify->add_option("--prime-min", vo.prime_min, "drop checks below this prime");
    verify->add_option("--prime-max", vo.prime_max, "upper bound (primes, or n for theorem2b)");
    verify->add_option("--n", vf_n, "restrict families with an n index to one n");
    verify->add_option("--m-max", vo.m_max, "three-term families: largest m");
    verify->add_option("--r-max", vo.r_max, "three-term families: largest r");
    verify->add_option("--terms", vo.terms, "identity families: precision (default auto = 200)");
    verify->add_option("--format", vf_format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--verbose", vf_verbose, "list passing instances too");

    // hecke
    auto* hecke = app.add_subcommand("hecke", "coefficient multiplicativity check");
    std::string hk_form = "f1";
    unsigned long hk_pmax = 50;
    unsigned long hk_range = 20;
    unsigned hk_weight = 5;
    std::string hk_format = "text";
    bool hk_verbose = false;
    hecke->add_option("--form", hk_form, "form whose coefficients are tested (default f1)");
    hecke->add_option("--prime-max", hk_pmax, "largest prime (default 50)");
    hecke->add_option("--range", hk_range, "check a(p n) for n up to this (default 20)");
    hecke->add_option("--weight", hk_weight, "form weight k in the p^(k-1) factor (default 5)");
    std::string hk_chi = "legendre";
    hecke->add_option("--chi", hk_chi, "character chi(p): legendre (-1|p, default) or trivial")
        ->check(CLI::IsMember({"legendre", "trivial"}));
    hecke->add_option("--format", hk_format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    hecke->add_flag("--verbose", hk_verbose, "list passing instances too");

    // cornacchia
    auto* corn = app.add_subcommand("cornacchia", "two-squares decomposition of a prime");
    unsigned long corn_p = 0;
    corn->add_option("p", corn_p, "prime = 1 (mod 4)")->required();

    // cache
    auto* cache = app.add_subcommand("cache", "series cache maintenance");
    cache->require_subcommand(1);
    std::string cache_dir;
    if (const char* env = std::getenv("MODCONG_CACHE_DIR")) cache_dir = env;
    auto* cw = cache->add_subcommand("write", "expand a form and store it");
    auto* cr = cache->add_subcommand("read", "print a stored expansion");
    auto* cc = cache->add_subcommand("clear", "remove cached series");
    std::string ca_form;
    long ca_terms = 0;
    for (auto* sub : {cw, cr, cc})
        sub->add_option("--dir", cache_dir, "cache directory (default $MODCONG_CACHE_DIR)");
    cw->add_option("--form", ca_form, "form name")->required();
    cw->add_option("--terms", ca_terms, "number of coefficients")->required();
    cr->add_option("--form", ca_form, "form name")->required();

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*expand) {
            if (ex_terms < 1) throw BadParameter("--terms must be >= 1");
            std::optional<Int> mod;
            if (!ex_mod.empty()) {
                mod = Int(ex_mod);
                if (*mod < 2) throw BadParameter("--mod must be >= 2");
            }
            return run_expand(ex_form, static_cast<std::size_t>(ex_terms), mod,
                              ex_format, out);
        }
        if (*verify) {
            if (vf_n) vo.n = static_cast<unsigned>(vf_n);
            auto reports = dispatch_family(vo);
            apply_prime_min(reports, vo.prime_min);
            return emit_reports(reports, vf_format, vf_verbose, out);
        }
        if (*hecke) {
            FormSpec spec = parse_form_spec(hk_form);
            // Forms supported only on exponents s*n are read as a(n) = coeff of q^(s n);
            // detect s from a probe expansion, then build to s*pmax*range.
            PowerSeries probe = build_form(spec, std::min<std::size_t>(hk_pmax * hk_range + 1, 256));
            std::size_t stride = 0;
            for (std::size_t i = 1; i < probe.precision(); ++i)
                if (probe[i] != 0) stride = std::gcd(stride, i);
            if (stride == 0) stride = 1;
            PowerSeries f = build_form(spec, stride * hk_pmax * hk_range + 1);
            std::vector<Int> comp;
            comp.reserve(hk_pmax * hk_range + 1);
            for (std::size_t i = 0; i * stride < f.precision(); ++i)
                comp.push_back(f[i * stride]);
            SequenceTable tab{hk_form, 0, std::move(comp)};
            std::vector<VerificationReport> reports;
            reports.push_back(hecke_check(tab, 2, hk_weight, 0, hk_range));
            for (unsigned long p : primes_in(3, hk_pmax)) {
                int chi = hk_chi == "legendre" ? legendre_minus_one(p) : 1;
                reports.push_back(hecke_check(tab, p, hk_weight, chi, hk_range));
            }
            return emit_reports(reports, hk_format, hk_verbose, out);
        }
        if (*corn) {
            TwoSquares ts = cornacchia(corn_p);
            out << ts.p << " = " << ts.x << "^2 + " << ts.y << "^2\n";
            return 0;
        }
        if (*cache) {
            if (cache_dir.empty())
                throw BadParameter("no cache directory: pass --dir or set MODCONG_CACHE_DIR");
            if (*cw) {
                if (ca_terms < 1) throw BadParameter("--terms must be >= 1");
                FormSpec spec = parse_form_spec(ca_form);
                CacheEntry entry{form_spec_text(spec), spec.n,
                                 build_form(spec, static_cast<std::size_t>(ca_terms))};
                // file names use the base name; h:<n> keeps n separately
                entry.name = ca_form.substr(0, ca_form.find(':'));
                write_cached_series(cache_dir, entry);
                out << "wrote " << cache_path(cache_dir, entry.name, entry.n) << "\n";
                return 0;
            }
            if (*cr) {
                FormSpec spec = parse_form_spec(ca_form);
                std::string base = ca_form.substr(0, ca_form.find(':'));
                CacheEntry entry =
                    read_cached_series(cache_path(cache_dir, base, spec.n));
                out << render_series_text(entry.series, "q") << "\n";
                return 0;
            }
            std::size_t removed = clear_cache(cache_dir);
            out << "removed " << removed << " cached series\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace modcong::cli
