// Command-line front end: series evaluation, constants, finite sums, word
// algebra, Fourier-Legendre coefficients, and the identity verification suite.
#include "CLI11.hpp"

#include "zetalab/apery.hpp"
#include "zetalab/finite_sums.hpp"
#include "zetalab/iterint.hpp"
#include "zetalab/legendre.hpp"
#include "zetalab/suite.hpp"
#include "zetalab/words.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace zetalab;

namespace {

struct Config {
    int digits = 32;
    long budget = 1000000;
    int workers = (int)std::max(1u, std::thread::hardware_concurrency());
    bool json = false;
};

std::string fmt_real(const XReal &x, int digits) {
    return x.str(digits, std::ios_base::fmtflags(0));
}

std::string fmt_cplx(const XComplex &z, int digits) {
    std::string s = fmt_real(z.re, digits);
    if (z.im != 0) s += " + " + fmt_real(z.im, digits) + " i";
    return s;
}

std::string fmt_gauss(const GaussRat &g) {
    std::string s = g.re.str();
    if (!(g.im == 0)) s += " + (" + g.im.str() + ") i";
    return s;
}

// Splits "a,b,c" on commas, trimming spaces.
std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)c)) {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

Word parse_letter_word(const std::string &s) {
    Word w;
    for (const std::string &tok : split_commas(s)) {
        if (tok == "0") w.push_back(Letter::W0);
        else if (tok == "1") w.push_back(Letter::W1);
        else if (tok == "-1") w.push_back(Letter::Wm1);
        else if (tok == "i") w.push_back(Letter::Wi);
        else if (tok == "-i") w.push_back(Letter::Wmi);
        else throw std::runtime_error("bad letter '" + tok + "' (want 0,1,-1,i,-i)");
    }
    return w;
}

std::string word_str(const Word &w) {
    std::string s;
    for (Letter l : w) {
        if (!s.empty()) s += ",";
        switch (l) {
        case Letter::W0: s += "0"; break;
        case Letter::W1: s += "1"; break;
        case Letter::Wm1: s += "-1"; break;
        case Letter::Wi: s += "i"; break;
        case Letter::Wmi: s += "-i"; break;
        }
    }
    return s;
}

Rat parse_rat(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

XComplex parse_complex(const std::string &s) {
    // forms: "0.5", "-0.3", "i", "-i", "0.5+0.5i", "0.5-0.25i"
    std::string t = s;
    if (t == "i") return {XReal(0), XReal(1)};
    if (t == "-i") return {XReal(0), XReal(-1)};
    if (!t.empty() && t.back() == 'i') {
        t.pop_back();
        // find split between real and imaginary parts (sign not at position 0)
        for (size_t p = t.size(); p-- > 1;) {
            if ((t[p] == '+' || t[p] == '-') && t[p - 1] != 'e' && t[p - 1] != 'E') {
                std::string im = t.substr(p);
                if (im == "+") im = "1";
                if (im == "-") im = "-1";
                return {XReal(t.substr(0, p)), XReal(im)};
            }
        }
        if (t.empty() || t == "+") return {XReal(0), XReal(1)};
        if (t == "-") return {XReal(0), XReal(-1)};
        return {XReal(0), XReal(t)};
    }
    return {XReal(t), XReal(0)};
}

// constant expression grammar: pi | log2 | G | z(<comp>) | t(<comp>) |
// M(<comp>;<twists>) | R(<comp>) | Li(<comp>;<z-list>) | II(<letters>)
XComplex eval_const_expr(const std::string &expr) {
    std::string e;
    for (char c : expr)
        if (!isspace((unsigned char)c)) e += c;
    if (e == "pi") return {const_pi(), XReal(0)};
    if (e == "log2") return {const_log2(), XReal(0)};
    if (e == "G" || e == "catalan") return {const_catalan(), XReal(0)};
    auto open = e.find('(');
    if (open == std::string::npos || e.back() != ')')
        throw std::runtime_error("cannot parse constant expression '" + expr + "'");
    std::string head = e.substr(0, open);
    std::string body = e.substr(open + 1, e.size() - open - 2);
    if (head == "z" || head == "zeta") return cmzv(parse_comp(body));
    if (head == "t") return mtv(parse_comp(body));
    if (head == "R") return {rvalue(parse_comp(body).parts), XReal(0)};
    if (head == "II") return iterint(parse_letter_word(body));
    auto semi = body.find(';');
    if (head == "M") {
        if (semi == std::string::npos)
            throw std::runtime_error("M(...) needs 'comp;twists'");
        TComp c = parse_comp(body.substr(0, semi));
        std::vector<std::string> tws = split_commas(body.substr(semi + 1));
        if (tws.size() != c.parts.size())
            throw std::runtime_error("twist count must match depth");
        for (size_t j = 0; j < tws.size(); ++j) {
            if (tws[j] == "1") c.twists[j] = Tw::P1;
            else if (tws[j] == "-1") c.twists[j] = Tw::M1;
            else if (tws[j] == "i") c.twists[j] = Tw::I;
            else if (tws[j] == "-i") c.twists[j] = Tw::MI;
            else throw std::runtime_error("bad twist '" + tws[j] + "'");
        }
        return cmzv(c);
    }
    if (head == "Li") {
        if (semi == std::string::npos)
            throw std::runtime_error("Li(...) needs 'comp;z-list'");
        TComp c = parse_comp(body.substr(0, semi));
        std::vector<XComplex> zs;
        for (const std::string &tok : split_commas(body.substr(semi + 1)))
            zs.push_back(parse_complex(tok));
        if (zs.size() == 1 && c.parts.size() > 1)
            zs.resize(c.parts.size(), XComplex(XReal(1)));
        return li(c.parts, zs);
    }
    throw std::runtime_error("unknown constant family '" + head + "'");
}

long env_long(const char *name, long fallback) {
    const char *v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stol(v);
    } catch (...) {
        return fallback;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"central-binomial series, finite harmonic sums, and colored "
                 "multiple zeta values with machine-verified identities"};
    app.require_subcommand(1);

    Config cfg;
    cfg.digits = (int)env_long("ZETALAB_PREC", cfg.digits);
    cfg.budget = env_long("ZETALAB_BUDGET", cfg.budget);
    cfg.workers = (int)env_long("ZETALAB_WORKERS", cfg.workers);
    app.add_option("--prec", cfg.digits, "working digits for output (>= 16)");
    app.add_option("--budget", cfg.budget, "series summation budget (>= 1000)");
    app.add_option("--workers", cfg.workers, "parallel workers for verify");
    app.add_flag("--json", cfg.json, "JSON output");

    // verify
    auto *verify = app.add_subcommand("verify", "run the identity registry");
    std::string filter = "*", json_file;
    verify->add_option("--filter", filter, "glob filter on identity ids");
    verify->add_option("--report", json_file, "write the JSON report to a file");

    // eval-series
    auto *evals = app.add_subcommand("eval-series", "evaluate a series spec");
    std::string spec, route = "series";
    evals->add_option("--spec", spec, "series spec, e.g. \"binom:1 denom:n^2 f:t(1)\"")
        ->required();
    evals->add_option("--route", route, "series|integral|both")
        ->check(CLI::IsMember({"series", "integral", "both"}));
    evals->add_option("--digits", cfg.digits, "target digits (alias of --prec)");

    // constant
    auto *cst = app.add_subcommand("constant", "evaluate a constant expression");
    std::string expr;
    cst->add_option("--expr", expr,
                    "pi | log2 | G | z(..) | t(..) | M(..;tw) | R(..) | "
                    "Li(..;z) | II(letters)")
        ->required();

    // finsum
    auto *fin = app.add_subcommand("finsum", "finite (t-)harmonic sums");
    std::string kind = "z", comp_text;
    long nn = 1;
    std::string alpha_text, x_text;
    fin->add_option("--kind", kind, "z|z*|t|t*")
        ->check(CLI::IsMember({"z", "z*", "t", "t*"}));
    fin->add_option("--comp", comp_text, "composition, e.g. \"2~,1\"")->required();
    fin->add_option("--n", nn, "upper summation index")->required();
    fin->add_option("--alpha", alpha_text, "rational shift P/Q (z kind only)");
    fin->add_option("--x", x_text, "real argument for the partial-power variant");

    // dual
    auto *dual = app.add_subcommand("dual", "Hoffman dual of a composition");
    std::string dual_comp;
    dual->add_option("comp", dual_comp, "composition, e.g. 1,1,2,1")->required();

    // stuffle / shuffle
    auto *stuf = app.add_subcommand("stuffle", "quasi-shuffle product of two words");
    std::string su, sv;
    stuf->add_option("u", su, "first word (composition grammar, ~ for sign -1)")
        ->required();
    stuf->add_option("v", sv, "second word")->required();
    auto *shuf = app.add_subcommand("shuffle", "shuffle product of two letter words");
    std::string wu, wv;
    shuf->add_option("u", wu, "letters over {0,1,-1,i,-i}, comma separated")->required();
    shuf->add_option("v", wv, "second letter word")->required();

    // fl
    auto *fl = app.add_subcommand("fl", "Fourier-Legendre log-moment coefficients");
    std::string fn = "logm";
    int fl_m = 1, fl_n = 0;
    fl->add_option("--fn", fn, "logm|logm-sqrt")
        ->check(CLI::IsMember({"logm", "logm-sqrt"}));
    fl->add_option("--m", fl_m, "log power")->required();
    fl->add_option("--n", fl_n, "Legendre index")->required();

    // explain
    auto *exp = app.add_subcommand("explain", "describe a registered identity");
    std::string exp_id;
    exp->add_option("id", exp_id, "identity id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit 2; --help exits 0
    }

    if (cfg.digits < 16 || cfg.budget < 1000 || cfg.workers < 1) {
        std::fprintf(stderr, "error: need --prec >= 16, --budget >= 1000, --workers >= 1\n");
        return 2;
    }
    const int out_digits = cfg.digits - 2; // do not advertise unearned precision

    try {
        if (*verify) {
            auto res = suite::run(filter, cfg.workers);
            if (!json_file.empty()) {
                std::ofstream f(json_file);
                f << suite::to_json(res) << "\n";
            }
            if (cfg.json) {
                std::cout << suite::to_json(res) << "\n";
                int fails = 0;
                for (const auto &r : res)
                    fails += r.verdict == suite::Verdict::Fail ||
                             r.verdict == suite::Verdict::Error;
                return fails ? 1 : 0;
            }
            return suite::print_report(res, out_digits) ? 1 : 0;
        }
        if (*evals) {
            SeriesSpec sp = parse_series_spec(spec);
            if (route == "series" || route == "both") {
                SeriesResult r = eval_series(sp, cfg.digits, cfg.budget);
                std::printf("series   %s  err<=%s  terms=%ld\n",
                            fmt_real(r.value, out_digits).c_str(),
                            fmt_real(r.err, 3).c_str(), r.terms);
            }
            if (route == "integral" || route == "both") {
                if (!has_integral_route(sp)) {
                    std::fprintf(stderr, "error: no integral route for this spec\n");
                    return 1;
                }
                XReal err = 0;
                XReal v = eval_series_integral(sp, &err);
                std::printf("integral %s  err<=%s\n", fmt_real(v, out_digits).c_str(),
                            fmt_real(err, 3).c_str());
            }
            return 0;
        }
        if (*cst) {
            XComplex v = eval_const_expr(expr);
            std::printf("%s\n", fmt_cplx(v, out_digits).c_str());
            return 0;
        }
        if (*fin) {
            TComp c = parse_comp(comp_text);
            bool star = kind.size() > 1;
            bool tkind = kind[0] == 't';
            if (!x_text.empty()) {
                if (!star) throw std::runtime_error("--x needs kind z* or t*");
                XReal x(x_text);
                XReal v = tkind ? t_star_n_x(c.parts, nn, x)
                                : zeta_star_n_x(c.parts, nn, x);
                std::printf("%s\n", fmt_real(v, out_digits).c_str());
            } else if (!alpha_text.empty()) {
                if (tkind) throw std::runtime_error("--alpha needs kind z or z*");
                Rat v = zeta_n_alpha(c.parts, nn, parse_rat(alpha_text), star);
                std::printf("%s\n", v.str().c_str());
            } else {
                GaussRat v = tkind ? t_n_tw(c, nn, star) : zeta_n_tw(c, nn, star);
                std::printf("%s\n", fmt_gauss(v).c_str());
            }
            return 0;
        }
        if (*dual) {
            TComp c = parse_comp(dual_comp);
            if (!c.untwisted()) throw std::runtime_error("dual is defined untwisted");
            std::printf("%s\n", print_comp(hoffman_dual(c.parts)).c_str());
            return 0;
        }
        if (*stuf) {
            auto to_sw = [](const std::string &s) {
                TComp c = parse_comp(s);
                StuffleWord w;
                for (size_t j = 0; j < c.parts.size(); ++j) {
                    if (c.twists[j] != Tw::P1 && c.twists[j] != Tw::M1)
                        throw std::runtime_error("stuffle words use signs +-1 only");
                    w.push_back({c.parts[j], c.twists[j] == Tw::P1 ? 1 : -1});
                }
                return w;
            };
            SLinComb r = stuffle(to_sw(su), to_sw(sv));
            for (const auto &[w, coef] : r) {
                TComp c;
                for (const auto &l : w) {
                    c.parts.push_back(l.k);
                    c.twists.push_back(l.sign > 0 ? Tw::P1 : Tw::M1);
                }
                std::printf("%s * [%s]\n", coef.str().c_str(), print_comp(c).c_str());
            }
            return 0;
        }
        if (*shuf) {
            WLinComb r = shuffle(parse_letter_word(wu), parse_letter_word(wv));
            for (const auto &[w, coef] : r)
                std::printf("%s * [%s]\n", fmt_gauss(coef).c_str(), word_str(w).c_str());
            return 0;
        }
        if (*fl) {
            bool sq = fn == "logm-sqrt";
            XReal formula = sq ? fl_coeff_logm_sqrt(fl_n, fl_m) : fl_coeff_logm(fl_n, fl_m);
            XReal qe = 0;
            int n = fl_n, m = fl_m;
            XReal quad = integrate(
                [n, m, sq](const XReal &x, const XReal &omx) {
                    (void)omx;
                    XReal v = legendre_P(n, 2 * x - 1);
                    if (m) v *= pow_int(log(x), m);
                    if (sq) v /= sqrt(x);
                    return v;
                },
                sq ? EndpointSub::SqrtLower : (m ? EndpointSub::LogLower : EndpointSub::None),
                &qe);
            std::printf("formula    %s\nquadrature %s  err<=%s\n",
                        fmt_real(formula, out_digits).c_str(),
                        fmt_real(quad, out_digits).c_str(), fmt_real(qe, 3).c_str());
            return 0;
        }
        if (*exp) {
            std::printf("%s\n", suite::explain(exp_id).c_str());
            return 0;
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
