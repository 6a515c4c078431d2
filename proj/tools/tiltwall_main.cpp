#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tiltwall/acceptance.hpp"
#include "tiltwall/charges.hpp"
#include "tiltwall/error.hpp"
#include "tiltwall/inequalities.hpp"
#include "tiltwall/json_io.hpp"
#include "tiltwall/polycharge.hpp"
#include "tiltwall/scenarios.hpp"
#include "tiltwall/walls.hpp"

using tiltwall::Errc;
using tiltwall::Error;
using tiltwall::NumClass;
using tiltwall::Rational;
using tiltwall::VarietyModel;
using json = tiltwall::jio::json;

namespace {

Rational parse_rat(const std::string& s, const std::string& what) {
    auto q = Rational::parse(s);
    if (!q) throw Error(Errc::parse_error, "malformed rational for " + what + ": \"" + s + "\"");
    return *q;
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(Errc::parse_error, "malformed integer for " + what + ": \"" + s + "\"");
    }
}

VarietyModel model_from_path(const std::string& name) {
    const char* path = std::getenv("TILTWALL_MODEL_PATH");
    if (!path) throw Error(Errc::parse_error, "unknown model \"" + name +
                                                  "\" and TILTWALL_MODEL_PATH is not set");
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, std::string("cannot open model file ") + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, std::string("bad model file: ") + e.what());
    }
    if (j.is_object()) j = json::array({j});
    for (const auto& entry : j)
        if (entry.value("name", std::string()) == name) return tiltwall::jio::model_from(entry);
    throw Error(Errc::parse_error, "model \"" + name + "\" not found in " + path);
}

VarietyModel resolve_model(const std::string& selector) {
    if (selector == "p3") return VarietyModel::p3();
    if (selector == "quadric") return VarietyModel::quadric();
    if (selector.rfind("hypersurface:", 0) == 0)
        return VarietyModel::hypersurface(parse_long(selector.substr(13), "hypersurface degree"));
    if (selector.rfind("custom:", 0) == 0) {
        std::string rest = selector.substr(7);
        long vals[3];
        size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            size_t comma = i < 2 ? rest.find(',', pos) : rest.size();
            if (comma == std::string::npos)
                throw Error(Errc::parse_error, "custom model needs custom:d,lam2,lam3");
            vals[i] = parse_long(rest.substr(pos, comma - pos), "custom model field");
            pos = comma + 1;
        }
        return VarietyModel::custom("custom", vals[0], vals[1], vals[2]);
    }
    return model_from_path(selector);
}

struct ClassOpts {
    std::string class_json;
    std::string line_bundle_k;

    NumClass get() const {
        if (!class_json.empty() && !line_bundle_k.empty())
            throw Error(Errc::parse_error, "give either --class or --line-bundle, not both");
        if (!line_bundle_k.empty())
            return tiltwall::line_bundle(parse_rat(line_bundle_k, "--line-bundle"));
        if (!class_json.empty()) {
            json j;
            try {
                j = json::parse(class_json);
            } catch (const json::exception& e) {
                throw Error(Errc::parse_error, std::string("bad class JSON: ") + e.what());
            }
            return tiltwall::jio::numclass_from(j);
        }
        throw Error(Errc::parse_error, "a class is required (--class or --line-bundle)");
    }
};

// Scale parameters: exactly one of alpha or t = alpha^2.
struct ScaleOpts {
    std::string alpha;
    std::string tsq;

    bool has_alpha() const { return !alpha.empty(); }
    bool has_tsq() const { return !tsq.empty(); }
    Rational get_alpha() const {
        if (has_tsq())
            throw Error(Errc::irrational_value,
                        "this operation needs alpha itself; --t-squared only fixes alpha^2");
        return parse_rat(alpha.empty() ? "1" : alpha, "--alpha");
    }
    Rational get_tsq() const {
        if (has_tsq()) return parse_rat(tsq, "--t-squared");
        Rational a = parse_rat(alpha.empty() ? "1" : alpha, "--alpha");
        return a * a;
    }
};

void emit(const json& j) {
    std::cout << j.dump() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact tilt-stability numerics on Picard-rank-1 threefolds"};
    app.require_subcommand(1);

    std::string model_arg = "p3";
    app.add_option("--model", model_arg,
                   "p3 | quadric | hypersurface:D | custom:d,lam2,lam3 | name from "
                   "TILTWALL_MODEL_PATH")
        ->capture_default_str();

    ClassOpts cls;
    ScaleOpts scale;
    std::string beta_str = "0";

    auto add_class_opts = [&](CLI::App* cmd) {
        cmd->add_option("--class", cls.class_json, "class as JSON {\"r\":..,\"c\":..,...}");
        cmd->add_option("--line-bundle", cls.line_bundle_k, "class of O(kH)");
    };
    auto add_scale_opts = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", scale.alpha, "ample scale omega = alpha H");
        cmd->add_option("--t-squared", scale.tsq, "alpha^2 given directly");
        cmd->add_option("--beta", beta_str, "B-field beta");
    };

    // charge
    auto* charge = app.add_subcommand("charge", "central charges");
    charge->fallthrough();
    std::string charge_kind;
    std::string s_str, t_str;
    charge->add_option("--kind", charge_kind, "z|zbar|zst|zp|zb|zinf|minch1")->required();
    add_class_opts(charge);
    add_scale_opts(charge);
    charge->add_option("--s", s_str, "s parameter (zst)");
    charge->add_option("--t", t_str, "t parameter (zst)");
    charge->callback([&] {
        auto model = resolve_model(model_arg);
        if (charge_kind == "minch1") {
            emit(json{{"min_ch1",
                       tiltwall::jio::rational_json(tiltwall::minimal_ch1(
                           scale.get_alpha(), parse_rat(beta_str, "--beta"), model))}});
            return;
        }
        NumClass v = cls.get();
        if (charge_kind == "zst") {
            if (model.d != 1)
                throw Error(Errc::unsupported_model, "zst is defined on degree-one models only");
            if (s_str.empty() || t_str.empty())
                throw Error(Errc::parse_error, "zst needs --s and --t");
            emit(tiltwall::jio::complex_json(
                tiltwall::z_st(v, parse_rat(s_str, "--s"), parse_rat(t_str, "--t"))));
            return;
        }
        Rational alpha = scale.get_alpha();
        Rational beta = parse_rat(beta_str, "--beta");
        if (charge_kind == "z")
            emit(tiltwall::jio::complex_json(tiltwall::z(v, alpha, beta, model)));
        else if (charge_kind == "zbar")
            emit(tiltwall::jio::complex_json(tiltwall::z_bar(v, alpha, beta, model)));
        else if (charge_kind == "zp")
            emit(tiltwall::jio::polycharge_json(tiltwall::zp(v, alpha, beta, model)));
        else if (charge_kind == "zb")
            emit(tiltwall::jio::polycharge_json(tiltwall::zb_poly(v, alpha, beta, model)));
        else if (charge_kind == "zinf")
            emit(tiltwall::jio::polycharge_json(tiltwall::z_inf(v, alpha, beta, model)));
        else
            throw Error(Errc::parse_error, "unknown charge kind \"" + charge_kind + "\"");
    });

    // slope
    auto* slope = app.add_subcommand("slope", "slope functions");
    slope->fallthrough();
    std::string slope_kind;
    slope->add_option("--kind", slope_kind, "mu|nu|muhat")->required();
    add_class_opts(slope);
    add_scale_opts(slope);
    slope->callback([&] {
        auto model = resolve_model(model_arg);
        NumClass v = cls.get();
        Rational beta = parse_rat(beta_str, "--beta");
        json out;
        if (slope_kind == "mu") {
            // mu is even in alpha, so alpha^2 alone determines it.
            Rational tsq = scale.get_tsq();
            if (tsq.sign() <= 0) throw Error(Errc::invalid_ample_class, "alpha^2 must be positive");
            if (v.r.is_zero())
                out = tiltwall::jio::slope_json(tiltwall::SlopeValue::infinity());
            else
                out = tiltwall::jio::slope_json(tiltwall::SlopeValue::finite(
                    tsq * Rational(model.d) * (v.c - beta * v.r) / v.r));
        } else if (slope_kind == "nu" || slope_kind == "muhat") {
            if (scale.has_tsq()) {
                // Only the exactly-determined cases survive an irrational alpha.
                Rational tsq = scale.get_tsq();
                if (tsq.sign() <= 0)
                    throw Error(Errc::invalid_ample_class, "alpha^2 must be positive");
                NumClass w = tiltwall::twist(v, beta);
                Rational numer = slope_kind == "nu" ? w.d2 - tsq * w.r / 6 : w.d2;
                if (w.c.is_zero())
                    out = tiltwall::jio::slope_json(tiltwall::SlopeValue::infinity());
                else if (numer.is_zero())
                    out = tiltwall::jio::slope_json(tiltwall::SlopeValue::finite(0));
                else
                    throw Error(Errc::irrational_value,
                                "slope is irrational at this alpha^2; pass --alpha instead");
            } else {
                Rational alpha = scale.get_alpha();
                auto sv = slope_kind == "nu" ? tiltwall::nu(v, alpha, beta, model)
                                             : tiltwall::mu_hat(v, alpha, beta, model);
                out = tiltwall::jio::slope_json(sv);
                if (slope_kind == "muhat" && !v.r.is_zero()) out["warning"] = "nonzero-rank";
            }
        } else {
            throw Error(Errc::parse_error, "unknown slope kind \"" + slope_kind + "\"");
        }
        emit(out);
    });

    // poly-compare
    auto* polycmp = app.add_subcommand("poly-compare", "limit-phase order of two charges");
    polycmp->fallthrough();
    std::string pc_kind = "zinf";
    std::string class_a, class_b, charge_a, charge_b;
    int shift_a = 0, shift_b = 0;
    polycmp->add_option("--kind", pc_kind, "zp|zb|zinf (for class inputs)")
        ->capture_default_str();
    polycmp->add_option("--class-a", class_a, "first class JSON");
    polycmp->add_option("--class-b", class_b, "second class JSON");
    polycmp->add_option("--charge-a", charge_a, "first charge JSON (overrides --class-a)");
    polycmp->add_option("--charge-b", charge_b, "second charge JSON (overrides --class-b)");
    polycmp->add_option("--shift-a", shift_a, "homological shift applied to class a");
    polycmp->add_option("--shift-b", shift_b, "homological shift applied to class b");
    add_scale_opts(polycmp);
    polycmp->callback([&] {
        auto model = resolve_model(model_arg);
        Rational beta = parse_rat(beta_str, "--beta");
        auto build = [&](const std::string& charge_json, const std::string& class_json,
                         int shift) -> tiltwall::PolyCharge {
            if (!charge_json.empty())
                return tiltwall::jio::polycharge_from(json::parse(charge_json));
            if (class_json.empty())
                throw Error(Errc::parse_error, "poly-compare needs two classes or charges");
            NumClass v = tiltwall::jio::numclass_from(json::parse(class_json));
            if (shift % 2 != 0) v = -v;
            Rational alpha = scale.get_alpha();
            if (pc_kind == "zp") return tiltwall::zp(v, alpha, beta, model);
            if (pc_kind == "zb") return tiltwall::zb_poly(v, alpha, beta, model);
            if (pc_kind == "zinf") return tiltwall::z_inf(v, alpha, beta, model);
            throw Error(Errc::parse_error, "unknown poly-compare kind \"" + pc_kind + "\"");
        };
        try {
            auto p = build(charge_a, class_a, shift_a);
            auto q = build(charge_b, class_b, shift_b);
            auto ord = tiltwall::compare_limit_phase(p, q);
            const char* name = ord == tiltwall::PhaseOrder::Greater ? "greater"
                               : ord == tiltwall::PhaseOrder::Less  ? "less"
                                                                    : "equal";
            emit(json{{"order", name}});
        } catch (const json::exception& e) {
            throw Error(Errc::parse_error, std::string("bad JSON: ") + e.what());
        }
    });

    // check
    auto* check = app.add_subcommand("check", "discriminant and ch3 bounds");
    check->fallthrough();
    std::string check_kind;
    check->add_option("--kind", check_kind, "bg:a,b|strong|con14|identity74")->required();
    add_class_opts(check);
    add_scale_opts(check);
    check->callback([&] {
        auto model = resolve_model(model_arg);
        NumClass v = cls.get();
        Rational beta = parse_rat(beta_str, "--beta");
        Rational tsq = scale.get_tsq();
        if (check_kind.rfind("bg:", 0) == 0) {
            std::string rest = check_kind.substr(3);
            auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw Error(Errc::parse_error, "bg needs two parameters: bg:a,b");
            Rational a = parse_rat(rest.substr(0, comma), "a");
            Rational b = parse_rat(rest.substr(comma + 1), "b");
            auto verdict = tiltwall::check_bg_general_tsq(v, tsq, beta, a, b, model);
            emit(tiltwall::jio::verdict_json(verdict.holds, verdict.margin));
        } else if (check_kind == "strong") {
            Rational margin = tiltwall::strong_bg_margin_tsq(v, tsq, beta, model);
            emit(tiltwall::jio::verdict_json(margin.sign() >= 0, margin));
        } else if (check_kind == "con14") {
            Rational margin = tiltwall::ch3_half_margin_tsq(v, tsq, beta, model);
            emit(tiltwall::jio::verdict_json(margin.sign() > 0, margin));
        } else if (check_kind == "identity74") {
            emit(json{{"holds", tiltwall::higher_discriminant_identity_tsq(v, tsq, beta, model)}});
        } else {
            throw Error(Errc::parse_error, "unknown check kind \"" + check_kind + "\"");
        }
    });

    // walls
    auto* walls = app.add_subcommand("walls", "wall geometry in (beta, t = alpha^2)");
    walls->fallthrough();
    walls->require_subcommand(1);
    std::string w_json, w_lb;
    std::string blo = "0", bhi = "0", tlo = "1", thi = "1";
    int max_rank = 5, threads = 1, samples = 100, precision = 12;
    bool csv = false;

    auto add_window_opts = [&](CLI::App* cmd) {
        cmd->add_option("--beta-lo", blo)->required();
        cmd->add_option("--beta-hi", bhi)->required();
        cmd->add_option("--t-lo", tlo)->required();
        cmd->add_option("--t-hi", thi)->required();
    };
    auto second_class = [&]() -> NumClass {
        if (!w_json.empty() && !w_lb.empty())
            throw Error(Errc::parse_error, "give either --w or --w-line-bundle, not both");
        if (!w_lb.empty()) return tiltwall::line_bundle(parse_rat(w_lb, "--w-line-bundle"));
        if (w_json.empty()) throw Error(Errc::parse_error, "second class required (--w)");
        try {
            return tiltwall::jio::numclass_from(json::parse(w_json));
        } catch (const json::exception& e) {
            throw Error(Errc::parse_error, std::string("bad class JSON: ") + e.what());
        }
    };

    auto* wenum = walls->add_subcommand("enumerate", "pseudo-walls for a class in a window");
    wenum->fallthrough();
    add_class_opts(wenum);
    add_window_opts(wenum);
    wenum->add_option("--max-rank", max_rank, "rank cap for destabilizer candidates")
        ->capture_default_str();
    wenum->add_option("--threads", threads)->capture_default_str();
    wenum->callback([&] {
        auto model = resolve_model(model_arg);
        auto win = tiltwall::Window::make(parse_rat(blo, "--beta-lo"), parse_rat(bhi, "--beta-hi"),
                                          parse_rat(tlo, "--t-lo"), parse_rat(thi, "--t-hi"));
        auto found = tiltwall::enumerate_pseudo_walls(cls.get(), win, max_rank, model, threads);
        emit(json{{"max_rank", max_rank},
                  {"model", tiltwall::jio::model_json(model)},
                  {"walls", tiltwall::jio::wall_list_json(found)}});
    });

    auto* wcurve = walls->add_subcommand("curve", "exact conic for nu(v) = nu(w)");
    wcurve->fallthrough();
    add_class_opts(wcurve);
    wcurve->add_option("--w", w_json, "second class JSON");
    wcurve->add_option("--w-line-bundle", w_lb, "second class as O(kH)");
    wcurve->callback([&] {
        emit(tiltwall::jio::conic_json(tiltwall::wall_curve(cls.get(), second_class())));
    });

    auto* wsample = walls->add_subcommand("sample", "sample points of a wall for plotting");
    wsample->fallthrough();
    std::string conic_in;
    add_class_opts(wsample);
    wsample->add_option("--w", w_json, "second class JSON");
    wsample->add_option("--w-line-bundle", w_lb, "second class as O(kH)");
    wsample->add_option("--conic", conic_in, "conic JSON (instead of a class pair)");
    wsample->add_option("--beta-lo", blo)->required();
    wsample->add_option("--beta-hi", bhi)->required();
    wsample->add_option("--samples", samples)->capture_default_str();
    wsample->add_option("--precision", precision, "decimal digits")->capture_default_str();
    wsample->add_flag("--csv", csv, "emit CSV instead of JSON");
    wsample->callback([&] {
        if (samples < 2) throw Error(Errc::parse_error, "--samples must be >= 2");
        tiltwall::WallConic wc;
        if (!conic_in.empty()) {
            try {
                wc = tiltwall::jio::conic_from(json::parse(conic_in));
            } catch (const json::exception& e) {
                throw Error(Errc::parse_error, std::string("bad conic JSON: ") + e.what());
            }
        } else {
            wc = tiltwall::wall_curve(cls.get(), second_class());
        }
        Rational lo = parse_rat(blo, "--beta-lo"), hi = parse_rat(bhi, "--beta-hi");
        if (lo > hi) throw Error(Errc::empty_window, "beta-lo must not exceed beta-hi");
        json rows = json::array();
        std::string text = "beta,t\n";
        for (int i = 0; i < samples; ++i) {
            Rational beta = lo + (hi - lo) * Rational(i) / Rational(samples - 1);
            auto sol = tiltwall::solve_t(wc, beta);
            if (sol.kind != tiltwall::TSolution::Kind::value || sol.t.sign() <= 0) continue;
            std::string bs = beta.decimal(precision), ts = sol.t.decimal(precision);
            text += bs + "," + ts + "\n";
            rows.push_back({{"beta", bs}, {"t", ts}});
        }
        if (csv)
            std::cout << text;
        else
            emit(rows);
    });

    // region
    auto* region = app.add_subcommand("region", "explicit stability regions");
    region->fallthrough();
    region->require_subcommand(1);
    auto add_st = [&](CLI::App* cmd) {
        cmd->add_option("--s", s_str)->required();
        cmd->add_option("--t", t_str)->required();
    };
    auto* rp3 = region->add_subcommand("p3", "0 < t < 1/2 and s > (7t-2)/(6(t+1))");
    rp3->fallthrough();
    add_st(rp3);
    rp3->callback([&] {
        emit(json{{"holds", tiltwall::region_p3(parse_rat(s_str, "--s"), parse_rat(t_str, "--t"))}});
    });
    auto* rp3l = region->add_subcommand("p3-lemma", "same with s <= 1/6");
    rp3l->fallthrough();
    add_st(rp3l);
    rp3l->callback([&] {
        emit(json{
            {"holds", tiltwall::region_p3_lemma(parse_rat(s_str, "--s"), parse_rat(t_str, "--t"))}});
    });
    auto* rq = region->add_subcommand("quadric", "1728 alpha^6 < 1");
    rq->fallthrough();
    add_scale_opts(rq);
    rq->callback([&] { emit(json{{"holds", tiltwall::region_quadric_tsq(scale.get_tsq())}}); });
    auto* rp3i = region->add_subcommand("p3-intro", "alpha^6 < 27");
    rp3i->fallthrough();
    add_scale_opts(rp3i);
    rp3i->callback([&] { emit(json{{"holds", tiltwall::region_p3_intro_tsq(scale.get_tsq())}}); });

    // scenario
    auto* scenario = app.add_subcommand("scenario", "worked numerical scenarios");
    scenario->fallthrough();
    scenario->require_subcommand(1);

    auto* sdiv = scenario->add_subcommand("divisor", "sheaf supported on a divisor in |mH|");
    sdiv->fallthrough();
    std::string sc_r = "1", sc_s = "0";
    long sc_m = 1;
    sdiv->add_option("--rank", sc_r, "rank on the divisor")->capture_default_str();
    sdiv->add_option("--m", sc_m, "divisor multiple: S in |mH|")->capture_default_str();
    sdiv->add_option("--s", sc_s, "ch2-degree on the divisor")->capture_default_str();
    add_scale_opts(sdiv);
    sdiv->callback([&] {
        auto model = resolve_model(model_arg);
        auto sc = tiltwall::DivisorScenario::make(parse_rat(sc_r, "--rank"), sc_m, scale.get_tsq(),
                                                  parse_rat(sc_s, "--s"), model);
        auto chk = tiltwall::divisor_check(sc);
        json out = tiltwall::jio::divisor_check_json(chk, sc);
        if (sc.s <= tiltwall::bog1_bound(sc))
            out["rez_lower_bound"] = tiltwall::jio::rational_json(tiltwall::rez_lower_bound(sc));
        emit(out);
    });

    auto* scurve = scenario->add_subcommand("curve", "ideal-sheaf twist for a curve on a "
                                                     "hypersurface");
    scurve->fallthrough();
    long cv_D = 5, cv_d = 2, cv_g = 0;
    scurve->add_option("--surface-degree", cv_D, "hypersurface degree D")->capture_default_str();
    scurve->add_option("--curve-degree", cv_d, "curve degree")->capture_default_str();
    scurve->add_option("--genus", cv_g, "arithmetic genus")->capture_default_str();
    scurve->callback([&] {
        auto cs = tiltwall::CurveScenario::make(cv_D, cv_d, cv_g);
        NumClass v = tiltwall::curve_ideal_class(cs);
        Rational D(cv_D), dd(cv_d), g(cv_g);
        emit(json{{"class", tiltwall::jio::numclass_json(v)},
                  {"ch3_oc", tiltwall::jio::rational_json((1 - g) - dd / 2 * (4 - D))},
                  {"t_scale_sq", tiltwall::jio::rational_json(3 - 6 * dd / D)}});
    });

    auto* scast = scenario->add_subcommand("castelnuovo", "genus bound sweep");
    scast->fallthrough();
    long d_lo = 4, d_hi = 12;
    scast->add_option("--min-degree", d_lo)->capture_default_str();
    scast->add_option("--max-degree", d_hi)->capture_default_str();
    scast->callback(
        [&] { emit(tiltwall::jio::castelnuovo_json(tiltwall::castelnuovo_verify(d_lo, d_hi))); });

    // verify
    auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
    verify->fallthrough();
    verify->callback([&] {
        if (tiltwall::accept::report(std::cout) > 0) std::exit(4);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << json{{"error", "parse-error"}, {"detail", e.what()}}.dump() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << json{{"error", tiltwall::errc_name(e.code())}, {"detail", e.what()}}.dump()
                  << "\n";
        return e.code() == Errc::parse_error ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }
}
