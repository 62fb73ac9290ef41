// cbi: tables, operator dumps and verification suites for the complementary Bannai-Ito family.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbi/cbi.hpp"
#include "cbi/suites.hpp"

namespace {

using cbi::ParamSet;
using cbi::Rational;
using cbi::report::Json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParamOptions {
    std::optional<std::string> rho1, rho2, r1, r2;

    void add(CLI::App* app, bool with_rho1 = true) {
        if (with_rho1) app->add_option("--rho1", rho1, "rho1 as p/q");
        app->add_option("--rho2", rho2, "rho2 as p/q");
        app->add_option("--r1", r1, "r1 as p/q");
        app->add_option("--r2", r2, "r2 as p/q");
    }
    bool any() const { return rho1 || rho2 || r1 || r2; }
    ParamSet get(const ParamSet& fallback) const {
        auto pick = [](const std::optional<std::string>& s, const Rational& d) { return s ? Rational::parse(*s) : d; };
        return {pick(rho1, fallback.rho1), pick(rho2, fallback.rho2), pick(r1, fallback.r1), pick(r2, fallback.r2)};
    }
};

const ParamSet kDefaultParams{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 4)};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + path);
    f << text;
}

/// key=value tokens as used by --even a=1 b=1 c=1 N=6.
std::map<std::string, std::string> key_values(const std::vector<std::string>& tokens, const std::vector<std::string>& keys,
                                              const std::string& option) {
    std::map<std::string, std::string> out;
    for (const auto& t : tokens) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw UsageError(option + ": expected key=value, got \"" + t + "\"");
        out[t.substr(0, eq)] = t.substr(eq + 1);
    }
    for (const auto& k : keys) {
        if (!out.count(k)) throw UsageError(option + ": missing " + k + "=...");
    }
    if (out.size() != keys.size()) throw UsageError(option + ": unexpected key");
    return out;
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
    const Rational r = Rational::parse(s);
    if (!r.is_integer() || r.sign() < 0) throw UsageError(what + " must be a nonnegative integer, got " + s);
    return static_cast<unsigned>(r.numerator().get_ui());
}

Json params_config(const ParamSet& p) { return cbi::report::to_json(p); }

// gen

struct GenOptions {
    std::string family = "cbi";
    ParamOptions params;
    unsigned n = 5;
    std::string format = "json";
    std::string out;
};

int run_gen(const GenOptions& o) {
    const ParamSet p = o.params.get(kDefaultParams);
    if (o.n > cbi::default_degree_cap) {
        throw UsageError("n is capped at " + std::to_string(cbi::default_degree_cap));
    }
    const cbi::Family fam = o.family == "bi" ? cbi::Family::BannaiIto : cbi::Family::Complementary;
    const cbi::PolyTable t = cbi::make_table(fam, p, o.n);
    write_output(o.out, o.format == "csv" ? cbi::report::to_csv(t) : cbi::report::dump(cbi::report::to_json(t)));
    return 0;
}

// dump-op

struct DumpOptions {
    std::string op = "d-alpha";
    ParamOptions params;
    std::string alpha = "0";
    std::string out;
};

int run_dump(const DumpOptions& o) {
    const ParamSet p = o.params.get(kDefaultParams);
    const Rational a = Rational::parse(o.alpha);
    cbi::ShiftReflectOp op;
    if (o.op == "d0") {
        op = cbi::build_D0(p);
    } else if (o.op == "u") {
        op = cbi::build_U(p);
    } else if (o.op == "d-alpha" || o.op == "k1") {
        op = cbi::build_D_alpha(p, a);
    } else if (o.op == "k2") {
        op = cbi::build_K2();
    } else if (o.op == "k3") {
        op = cbi::build_K3(p, a);
    } else if (o.op == "p") {
        op = cbi::build_P(p);
    } else if (o.op == "h") {
        op = cbi::build_H_y(p);
    } else {
        op = cbi::build_E_alpha({p.rho2, p.r1, p.r2}, a);
    }
    Json j{{"op", o.op}, {"params", params_config(p)}, {"alpha", a.str()}, {"terms", cbi::report::to_json(op)}};
    write_output(o.out, cbi::report::dump(j));
    return 0;
}

// verify

struct VerifyOptions {
    std::string suite;
    ParamOptions params;
    std::optional<std::string> alpha, beta;
    std::uint64_t seed = 1;
    std::optional<unsigned> draws;
    unsigned alphas = 3;
    std::optional<unsigned> n;
    long k_min = -8;
    long k_max = 8;
    std::vector<std::string> even, odd;
    std::optional<std::string> N;
    std::vector<std::string> Ns, gammas;
    std::optional<unsigned> max_degree;
    std::vector<double> eps{1e-3, 1e-4, 1e-5};
    std::string format = "json";
    std::string out;
};

cbi::suites::SuiteResult run_suite(const VerifyOptions& o) {
    namespace s = cbi::suites;
    Json config = Json::object();
    s::SuiteResult res;
    const unsigned max_degree = o.max_degree.value_or(cbi::default_monomial_cap);
    if (o.suite == "eigen" || o.suite == "five-term") {
        const bool five = o.suite == "five-term";
        std::vector<s::ParamAlpha> cases;
        if (o.params.any() || o.alpha) {
            cases.push_back({o.params.get(kDefaultParams), o.alpha ? Rational::parse(*o.alpha) : Rational(0)});
            config["params"] = params_config(cases.front().params);
            config["alpha"] = cases.front().alpha.str();
        } else {
            cbi::GenericityOptions gopt;
            gopt.avoid_grid_poles = five;
            const unsigned draws = o.draws.value_or(5);
            const unsigned alphas = five ? 1 : o.alphas;
            cases = s::draw_param_alpha(o.seed, draws, alphas, gopt);
            config["seed"] = o.seed;
            config["draws"] = draws;
            config["alphas"] = alphas;
        }
        if (five) {
            s::FiveTermRange r{o.n.value_or(12), o.k_min, o.k_max};
            if (r.k_min > r.k_max) throw UsageError("--k-min must not exceed --k-max");
            config["n"] = r.n_max;
            config["k_min"] = r.k_min;
            config["k_max"] = r.k_max;
            res = s::five_term_suite(cases, r);
        } else {
            config["n"] = o.n.value_or(30);
            res = s::eigen_suite(cases, o.n.value_or(30));
        }
    } else if (o.suite == "ortho") {
        std::vector<s::OrthoInput> cases;
        if (!o.even.empty()) {
            auto kv = key_values(o.even, {"a", "b", "c", "N"}, "--even");
            cases.push_back(s::even_input(Rational::parse(kv["a"]), Rational::parse(kv["b"]), Rational::parse(kv["c"]),
                                          parse_unsigned(kv["N"], "N")));
        }
        if (!o.odd.empty()) {
            auto kv = key_values(o.odd, {"zeta", "xi", "chi", "N"}, "--odd");
            cases.push_back(s::odd_input(Rational::parse(kv["zeta"]), Rational::parse(kv["xi"]),
                                         Rational::parse(kv["chi"]), parse_unsigned(kv["N"], "N")));
        }
        if (o.params.any()) {
            if (!o.N) throw UsageError("explicit parameters need --N");
            cases.push_back(s::explicit_ortho_input(o.params.get(kDefaultParams), parse_unsigned(*o.N, "N")));
        }
        if (cases.empty()) cases = s::default_ortho_sweep();
        Json inputs = Json::array();
        for (const auto& c : cases) inputs.push_back(c.flags);
        config["inputs"] = inputs;
        res = s::ortho_suite(cases);
    } else if (o.suite == "algebra") {
        std::vector<s::AlgebraInput> cases;
        if (o.params.any() || o.alpha || o.beta) {
            cases.push_back({o.params.get(kDefaultParams), o.alpha ? Rational::parse(*o.alpha) : Rational(0),
                             o.beta ? Rational::parse(*o.beta) : Rational(0)});
            config["params"] = params_config(cases.front().params);
            config["alpha"] = cases.front().alpha.str();
            config["beta"] = cases.front().beta.str();
        } else {
            const unsigned draws = o.draws.value_or(5);
            cases = s::draw_algebra_inputs(o.seed, draws);
            config["seed"] = o.seed;
            config["draws"] = draws;
        }
        config["max_degree"] = max_degree;
        res = s::algebra_suite(cases, max_degree);
    } else if (o.suite == "dual-hahn") {
        const unsigned n = o.n.value_or(20);
        std::vector<s::DualHahnInput> cases;
        if (o.params.any() || o.alpha) {
            const ParamSet p = o.params.get(kDefaultParams);
            cases.push_back({{p.rho2, p.r1, p.r2}, o.alpha ? Rational::parse(*o.alpha) : Rational(0)});
            config["params"] = cbi::report::to_json(cases.front().params);
            config["alpha"] = cases.front().alpha.str();
        } else {
            const unsigned draws = o.draws.value_or(3);
            cases = s::draw_dual_hahn_inputs(o.seed, draws, n);
            config["seed"] = o.seed;
            config["draws"] = draws;
        }
        config["n"] = n;
        config["max_degree"] = max_degree;
        res = s::dual_hahn_suite(cases, n, max_degree);
    } else if (o.suite == "hahn") {
        s::HahnInput in{o.params.r1 ? Rational::parse(*o.params.r1) : Rational(1, 3),
                        o.params.r2 ? Rational::parse(*o.params.r2) : Rational(1, 5),
                        o.N ? parse_unsigned(*o.N, "N") : 4u};
        config["r1"] = in.r1.str();
        config["r2"] = in.r2.str();
        config["N"] = in.N;
        res = s::hahn_suite({in});
    } else if (o.suite == "para-krawtchouk") {
        std::vector<std::string> Ns = o.Ns.empty() ? std::vector<std::string>{"3", "5", "7"} : o.Ns;
        std::vector<std::string> gs = o.gammas.empty() ? std::vector<std::string>{"1/3", "2/5"} : o.gammas;
        std::vector<s::ParaKrawtchoukInput> cases;
        Json jn = Json::array(), jg = Json::array();
        for (const auto& N : Ns) jn.push_back(parse_unsigned(N, "N"));
        for (const auto& g : gs) jg.push_back(Rational::parse(g).str());
        for (const auto& N : Ns) {
            for (const auto& g : gs) cases.push_back({parse_unsigned(N, "N"), Rational::parse(g)});
        }
        config["N"] = jn;
        config["gamma"] = jg;
        res = s::para_krawtchouk_suite(cases);
    } else if (o.suite == "aw-limit") {
        std::vector<ParamSet> cases;
        if (o.params.any()) {
            cases.push_back(o.params.get(kDefaultParams));
        } else {
            cases = {kDefaultParams, ParamSet{Rational(3, 7), Rational(-2, 5), Rational(5, 3), Rational(1, 11)}};
        }
        Json jp = Json::array();
        for (const auto& p : cases) jp.push_back(params_config(p));
        const unsigned n = o.n.value_or(6);
        config["params"] = jp;
        config["n"] = n;
        config["eps"] = o.eps;
        res = s::aw_limit_suite(cases, n, o.eps);
    } else {
        throw UsageError("unknown suite " + o.suite);
    }
    res.config = config;
    return res;
}

int run_verify(const VerifyOptions& o) {
    cbi::suites::SuiteResult res;
    try {
        res = run_suite(o);
    } catch (const std::exception& e) {
        Json err{{"suite", o.suite}, {"pass", false}, {"error", e.what()}};
        write_output(o.out, cbi::report::dump(err));
        std::cerr << "cbi verify " << o.suite << ": " << e.what() << "\n";
        return kExitUsage;
    }
    if (o.format == "csv") {
        if (o.suite != "ortho") throw UsageError("--format csv is only available for ortho");
        std::string text;
        for (std::size_t i = 0; i < res.cases.size(); ++i) {
            const auto& c = res.cases[i];
            if (i) text += "\n";
            text += "k,x_k,w_k\n";
            for (std::size_t k = 0; k < c["grid"].size(); ++k) {
                text += std::to_string(k) + "," + c["grid"][k].get<std::string>() + "," +
                        c["weights"][k].get<std::string>() + "\n";
            }
        }
        write_output(o.out, text);
    } else {
        write_output(o.out, cbi::report::dump(res.to_json()));
    }
    if (!res.passed()) {
        std::cerr << "FAIL " << res.witness->detail << "\n  reproduce: " << res.witness->reproduce << "\n";
        return kExitFail;
    }
    return 0;
}

void add_verify_suite(CLI::App* verify, const std::string& name, const std::string& help, VerifyOptions& o,
                      std::string& chosen) {
    CLI::App* sub = verify->add_subcommand(name, help);
    sub->callback([&chosen, name] { chosen = name; });
    sub->add_option("--out", o.out, "report path (default stdout)");
    if (name == "hahn") {
        sub->add_option("--r1", o.params.r1, "r1 as p/q (default 1/3)");
        sub->add_option("--r2", o.params.r2, "r2 as p/q (default 1/5)");
        sub->add_option("--N", o.N, "truncation size (default 4)");
        return;
    }
    if (name == "para-krawtchouk") {
        sub->add_option("--N", o.Ns, "odd sizes (default 3,5,7)")->delimiter(',');
        sub->add_option("--gamma", o.gammas, "gamma values as p/q (default 1/3,2/5)")->delimiter(',');
        return;
    }
    o.params.add(sub, name != "dual-hahn");
    if (name == "ortho") {
        sub->add_option("--even", o.even, "positive even case: a=.. b=.. c=.. N=..")->expected(4);
        sub->add_option("--odd", o.odd, "positive odd case: zeta=.. xi=.. chi=.. N=..")->expected(4);
        sub->add_option("--N", o.N, "truncation size for explicit parameters");
        sub->add_option("--format", o.format, "json or csv (k, x_k, w_k)")->check(CLI::IsMember({"json", "csv"}));
        return;
    }
    if (name == "aw-limit") {
        sub->add_option("--n", o.n, "largest n (default 6)");
        sub->add_option("--eps", o.eps, "decreasing eps values (default 1e-3,1e-4,1e-5)")->delimiter(',');
        return;
    }
    sub->add_option("--alpha", o.alpha, "alpha as p/q");
    sub->add_option("--seed", o.seed, "seed for parameter draws (default 1)");
    sub->add_option("--draws", o.draws, "number of parameter draws");
    if (name != "algebra") sub->add_option("--n", o.n, "largest degree");
    if (name == "algebra" || name == "dual-hahn") {
        sub->add_option("--max-degree", o.max_degree, "largest monomial for action checks (default 24)");
    }
    if (name == "eigen") sub->add_option("--alphas", o.alphas, "alpha values per draw (default 3)");
    if (name == "five-term") {
        sub->add_option("--k-min", o.k_min, "first grid index (default -8)");
        sub->add_option("--k-max", o.k_max, "last grid index (default 8)");
    }
    if (name == "algebra") sub->add_option("--beta", o.beta, "alpha shift as p/q");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complementary Bannai-Ito polynomials: tables, operators and verification suites"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "write a polynomial table");
    gen_cmd->add_option("--family", gen.family, "bi or cbi")->check(CLI::IsMember({"bi", "cbi"}));
    gen.params.add(gen_cmd);
    gen_cmd->add_option("--n", gen.n, "largest degree (default 5)");
    gen_cmd->add_option("--format", gen.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

    DumpOptions dump;
    CLI::App* dump_cmd = app.add_subcommand("dump-op", "write an operator as shift/reflection terms");
    dump_cmd->add_option("--op", dump.op, "d0, u, d-alpha, k1, k2, k3, p, h or e")
        ->check(CLI::IsMember({"d0", "u", "d-alpha", "k1", "k2", "k3", "p", "h", "e"}));
    dump.params.add(dump_cmd);
    dump_cmd->add_option("--alpha", dump.alpha, "alpha as p/q (default 0)");
    dump_cmd->add_option("--out", dump.out, "output path (default stdout)");

    VerifyOptions verify;
    std::string suite;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->require_subcommand(1);
    add_verify_suite(verify_cmd, "eigen", "D_a I_n = Lambda_n I_n", verify, suite);
    add_verify_suite(verify_cmd, "five-term", "five-term difference equation on both grids", verify, suite);
    add_verify_suite(verify_cmd, "ortho", "exact Gram matrices on truncated grids", verify, suite);
    add_verify_suite(verify_cmd, "algebra", "relations, Casimir and alpha shift", verify, suite);
    add_verify_suite(verify_cmd, "dual-hahn", "rho1 -> infinity limit and limit algebra", verify, suite);
    add_verify_suite(verify_cmd, "hahn", "symmetric Hahn reduction", verify, suite);
    add_verify_suite(verify_cmd, "para-krawtchouk", "para-Krawtchouk specialization", verify, suite);
    add_verify_suite(verify_cmd, "aw-limit", "numeric Askey-Wilson limit", verify, suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (dump_cmd->parsed()) return run_dump(dump);
        verify.suite = suite;
        return run_verify(verify);
    } catch (const cbi::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
