// hyperjac: seeded experiment front end for the core library.
//
// One JSON document per line on stdout; batch subcommands emit one document
// per specialization plus a summary document.  Exit codes: 0 affirmative
// verdict, 1 negative or inconclusive verdict, 2 usage/parse/precondition
// error, 3 resource cap exceeded.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperjac/cartier_manin.hpp"
#include "hyperjac/families.hpp"
#include "hyperjac/galois_scan.hpp"
#include "hyperjac/poly_expr.hpp"
#include "hyperjac/rep_bounds.hpp"
#include "hyperjac/report.hpp"
#include "hyperjac/splitmix.hpp"

namespace {

using hyperjac::Error;
using hyperjac::ErrorKind;
using hyperjac::ff::u32;
using hyperjac::ff::u64;
namespace curve = hyperjac::curve;
namespace families = hyperjac::families;
namespace galois = hyperjac::galois;
namespace rep = hyperjac::rep;
namespace report = hyperjac::report;
namespace ff = hyperjac::ff;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCapHit = 3;

struct Common {
    u64 p = 0;
    std::string poly;
    u64 seed = 0;
    u64 budget = 200;
    u64 max_work = 100'000'000;
    bool json = true;
};

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void print_text(const nlohmann::json& j, const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
        std::string path = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            print_text(value, path);
        } else if (value.is_string()) {
            std::cout << path << " = " << value.get<std::string>() << "\n";
        } else {
            std::cout << path << " = " << value.dump() << "\n";
        }
    }
}

void emit(const std::string& doc, bool json_mode) {
    if (json_mode) {
        std::cout << doc << "\n";
        return;
    }
    print_text(nlohmann::json::parse(doc), "");
    std::cout << "\n";
}

report::Inputs make_inputs(const char* command, const Common& c, const std::string& canonical) {
    report::Inputs in;
    in.command = command;
    in.p = c.p;
    in.poly = canonical;
    in.seed = c.seed;
    in.budget = c.budget;
    return in;
}

int cmd_galois(const Common& c) {
    ff::PrimeField F(c.p);
    auto parsed = ff::parse_poly(c.poly, F);
    auto in = make_inputs("galois", c, ff::canonical_string(parsed.poly));
    Timer t;
    auto verdict = galois::decide_galois(parsed.poly, c.budget, c.seed);
    emit(report::galois_doc(in, verdict, t.ms()), c.json);
    return verdict.status == galois::GaloisStatus::Inconclusive ? kNegative : kAffirmative;
}

int cmd_morse(const Common& c) {
    ff::PrimeField F(c.p);
    auto parsed = ff::parse_poly(c.poly, F);
    if (parsed.uses_z) throw Error(ErrorKind::Value, "morse expects a univariate polynomial in x");
    auto h = parsed.univariate();
    auto in = make_inputs("morse", c, ff::poly_to_string(F, h));
    Timer t;
    bool is_morse = galois::morse_check(F, h);
    emit(report::morse_doc(in, is_morse, t.ms()), c.json);
    return is_morse ? kAffirmative : kNegative;
}

// Shared by hw (Hasse-Witt only) and lpoly (full L-polynomial).  A univariate
// input inspects the single curve; a bivariate input draws --budget values of
// z0 from F_p and reports one document per specialization plus a summary.
int cmd_curve(const Common& c, const char* name, curve::Effort effort) {
    ff::PrimeField F(c.p);
    auto parsed = ff::parse_poly(c.poly, F);
    auto in = make_inputs(name, c, ff::canonical_string(parsed.poly));
    if (parsed.poly.is_zero() || parsed.poly.deg_x() < 3)
        throw Error(ErrorKind::Value, "curve subcommands need deg_x >= 3");
    u32 n = static_cast<u32>(parsed.poly.deg_x());
    if (curve::hasse_witt_work(c.p, n) > c.max_work)
        throw Error(ErrorKind::CapExceeded, "Hasse-Witt work estimate exceeds --max-work");

    auto refuted = [](curve::SSVerdict v) {
        return v == curve::SSVerdict::RefutedByPRank || v == curve::SSVerdict::RefutedByNewtonSlope;
    };

    if (!parsed.uses_z) {
        curve::HyperCurve C(F, parsed.univariate());
        Timer t;
        auto cert = curve::refute_supersingular(C, effort);
        emit(report::curve_doc(in, cert, t.ms()), c.json);
        bool affirmative = cert.verdict != curve::SSVerdict::ConsistentWithSupersingular;
        return affirmative ? kAffirmative : kNegative;
    }

    Timer t;
    u64 squarefree = 0, refutations = 0;
    for (u64 i = 0; i < c.budget; ++i) {
        u64 z0 = hyperjac::task_stream(c.seed, i).below(c.p);
        auto fz = parsed.poly.specialize(z0);
        if (ff::pk::deg<ff::PrimeField>(fz) < parsed.poly.deg_x()) {
            emit(report::curve_batch_skip_doc(in, i, z0, "degree drop"), c.json);
            continue;
        }
        try {
            curve::HyperCurve C(F, fz);
            ++squarefree;
            auto cert = curve::refute_supersingular(C, effort);
            if (refuted(cert.verdict)) ++refutations;
            emit(report::curve_batch_doc(in, i, z0, cert), c.json);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotSquarefree) throw;
            emit(report::curve_batch_skip_doc(in, i, z0, "not squarefree"), c.json);
        }
    }
    emit(report::curve_batch_summary(in, c.budget, squarefree, refutations, t.ms()), c.json);
    return refutations > 0 ? kAffirmative : kNegative;
}

struct RepTheoryArgs {
    bool check_b = false;
    bool tail = false;
    u64 n_max = 0;
    u32 n_lo = 0;
    u32 n_hi = 0;
    u64 dyadic_n = 0;
    u64 repan_n = 0;
    bool has_dyadic = false;
    bool has_repan = false;
};

int cmd_reptheory(const Common& c, const RepTheoryArgs& a) {
    int modes = int(a.check_b) + int(a.tail) + int(a.has_dyadic) + int(a.has_repan);
    if (modes != 1)
        throw Error(ErrorKind::Value,
                    "pick exactly one of --check-b, --tail, --dyadic, --repan");
    report::Inputs in;
    in.command = "reptheory";

    if (a.check_b) {
        if (a.n_max < 10) throw Error(ErrorKind::Value, "--check-b needs --n-max >= 10");
        Timer t;
        u64 count = 0;
        bool all_true = true;
        for (u64 n = 10; n <= a.n_max; n += 2) {
            auto r = rep::check_property_b(n);
            all_true = all_true && r.verdict;
            ++count;
            emit(report::property_b_doc(in, r), c.json);
        }
        emit(report::property_b_summary(in, count, all_true, t.ms()), c.json);
        return all_true ? kAffirmative : kNegative;
    }
    if (a.tail) {
        Timer t;
        auto rows = rep::verify_tail_inequality(a.n_lo, a.n_hi);
        bool all_true = true;
        for (const auto& [n, holds] : rows) {
            all_true = all_true && holds;
            emit(report::tail_doc(in, n, holds), c.json);
        }
        emit(report::tail_summary(in, rows.size(), all_true, t.ms()), c.json);
        return all_true ? kAffirmative : kNegative;
    }
    if (a.has_dyadic) {
        emit(report::dyadic_doc(in, rep::dyadic(a.dyadic_n)), c.json);
        return kAffirmative;
    }
    Timer t;
    auto r = rep::lemma_repAn_report(a.repan_n);
    emit(report::repan_doc(in, r, t.ms()), c.json);
    return r.char0_exceeds_2g && r.b.verdict ? kAffirmative : kNegative;
}

struct FamilyArgs {
    std::string kind;
    u64 g = 0;
    u64 q = 0;
    u64 t = 0;
    std::string h;
};

int cmd_family(const Common& c, const FamilyArgs& a) {
    ff::PrimeField F(c.p);
    families::FamilyKind kind;
    if (a.kind == "mori") {
        kind = families::FamilyKind::MoriOdd;
    } else if (a.kind == "even") {
        kind = families::FamilyKind::EvenTheorem;
    } else if (a.kind == "morse") {
        kind = families::FamilyKind::MorseShift;
    } else if (a.kind == "abhyankar") {
        kind = families::FamilyKind::Abhyankar;
    } else {
        throw Error(ErrorKind::Value, "--kind must be one of mori|even|morse|abhyankar");
    }
    ff::FpPoly h;
    if (kind == families::FamilyKind::MorseShift) {
        if (a.h.empty()) throw Error(ErrorKind::Value, "--kind morse needs --h");
        auto parsed = ff::parse_poly(a.h, F);
        if (parsed.uses_z) throw Error(ErrorKind::Value, "--h must be univariate in x");
        h = parsed.univariate();
    }
    families::FamilySpec spec{kind, F, a.g, a.q, a.t, h};
    auto in = make_inputs("family", c, "");
    Timer t;
    auto built = families::build_family(spec);
    emit(report::family_doc(in, spec, built, t.ms()), c.json);
    return kAffirmative;
}

int cmd_hypotheses(const Common& c) {
    ff::PrimeField F(c.p);
    auto parsed = ff::parse_poly(c.poly, F);
    auto in = make_inputs("hypotheses", c, ff::canonical_string(parsed.poly));
    Timer t;
    auto r = families::theorem_hypotheses(parsed.poly, c.budget, c.seed);
    emit(report::hypotheses_doc(in, r, t.ms()), c.json);
    return r.theorem_applies ? kAffirmative : kNegative;
}

void add_common(CLI::App* sub, Common& c, bool wants_poly, bool wants_seed, bool wants_work) {
    sub->add_option("--p", c.p, "odd prime modulus, 3 <= p < 2^31")->required();
    if (wants_poly)
        sub->add_option("--poly", c.poly, "polynomial in x and z, e.g. \"x^10-x+z\"")->required();
    if (wants_seed) {
        sub->add_option("--seed", c.seed, "experiment seed")->capture_default_str();
        sub->add_option("--budget", c.budget, "specializations to draw")->capture_default_str();
    }
    if (wants_work)
        sub->add_option("--max-work", c.max_work, "coefficient-operation cap")
            ->capture_default_str();
    sub->add_flag("--json,!--no-json", c.json, "one-line JSON documents (default) or flat text");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"experiment harness for hyperelliptic Jacobians y^2 = f(x, z0)"};
    app.require_subcommand(1);

    Common c;
    RepTheoryArgs ra;
    FamilyArgs fa;

    auto* galois_cmd = app.add_subcommand("galois", "certify Gal(f/F_p(z)) is S_n or A_n");
    add_common(galois_cmd, c, true, true, false);

    auto* morse_cmd = app.add_subcommand("morse", "decide the Morse condition for h(x)");
    add_common(morse_cmd, c, true, false, false);

    auto* rep_cmd = app.add_subcommand("reptheory", "2-adic dimension bounds, no field needed");
    rep_cmd->add_flag("--check-b", ra.check_b, "property (b) for even n in [10, --n-max]");
    rep_cmd->add_option("--n-max", ra.n_max, "upper end for --check-b");
    rep_cmd->add_flag("--tail", ra.tail, "2^n > n(n-2)^2 for n in [--n-lo, --n-hi]");
    rep_cmd->add_option("--n-lo", ra.n_lo, "lower end for --tail");
    rep_cmd->add_option("--n-hi", ra.n_hi, "upper end for --tail");
    rep_cmd->add_option("--dyadic", ra.dyadic_n, "print the dyadic expansion of n")
        ->each([&ra](const std::string&) { ra.has_dyadic = true; });
    rep_cmd->add_option("--repan", ra.repan_n, "representation-theoretic report for even n >= 10")
        ->each([&ra](const std::string&) { ra.has_repan = true; });
    rep_cmd->add_flag("--json,!--no-json", c.json, "");

    auto* hw_cmd = app.add_subcommand("hw", "Hasse-Witt matrix and p-rank");
    add_common(hw_cmd, c, true, true, true);

    auto* lpoly_cmd = app.add_subcommand("lpoly", "L-polynomial and Newton slopes, genus <= 4");
    add_common(lpoly_cmd, c, true, true, true);

    auto* family_cmd = app.add_subcommand("family", "build a named one-parameter family");
    family_cmd->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    add_common(family_cmd, c, false, false, false);
    family_cmd->add_option("--kind", fa.kind, "mori|even|morse|abhyankar")->required();
    family_cmd->add_option("--g", fa.g, "genus parameter for mori/even");
    family_cmd->add_option("--q", fa.q, "power of p for abhyankar");
    family_cmd->add_option("--t", fa.t, "shift exponent for abhyankar");
    family_cmd->add_option("--h", fa.h, "Morse polynomial for --kind morse");

    auto* hyp_cmd = app.add_subcommand("hypotheses", "run every theorem hypothesis against F");
    add_common(hyp_cmd, c, true, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (sub == galois_cmd) return cmd_galois(c);
        if (sub == morse_cmd) return cmd_morse(c);
        if (sub == rep_cmd) return cmd_reptheory(c, ra);
        if (sub == hw_cmd) return cmd_curve(c, "hw", curve::Effort::HWOnly);
        if (sub == lpoly_cmd) return cmd_curve(c, "lpoly", curve::Effort::FullL);
        if (sub == family_cmd) return cmd_family(c, fa);
        return cmd_hypotheses(c);
    } catch (const Error& e) {
        emit(report::error_doc(name, e), c.json);
        return e.kind() == ErrorKind::CapExceeded ? kCapHit : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
}
