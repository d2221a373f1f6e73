#include "hyperjac/report.hpp"

#include <json.hpp>

#include "hyperjac/poly_expr.hpp"

namespace hyperjac::report {

namespace {

using json = nlohmann::json;  // object keys sort, so dumps are byte-stable

json base(const Inputs& in) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = in.command;
    if (in.p) j["p"] = in.p;
    if (!in.poly.empty()) j["poly"] = in.poly;
    return j;
}

json base_seeded(const Inputs& in) {
    json j = base(in);
    j["seed"] = in.seed;
    j["budget"] = in.budget;
    return j;
}

json evidence_obj(const galois::GaloisVerdict& v) {
    json e;
    e["disc_square"] = v.disc_square;
    e["jordan_m"] = v.jordan ? json(v.jordan->m) : json(nullptr);
    e["jordan_z0"] = v.jordan ? json(v.jordan->z0_index) : json(nullptr);
    e["jordan_z0_k"] = v.jordan ? json(v.jordan->k) : json(nullptr);
    e["irreducible_z0"] = v.irreducible ? json(v.irreducible->z0_index) : json(nullptr);
    e["irreducible_z0_k"] = v.irreducible ? json(v.irreducible->k) : json(nullptr);
    return e;
}

json stats_obj(const galois::SampleStats& s) {
    return json{{"samples", s.samples}, {"ramified", s.ramified}, {"degree_drop", s.degree_drop}};
}

json hasse_witt_obj(const curve::SupersingularityCertificate& cert) {
    json hw;
    hw["matrix"] = cert.matrix.m;  // row-major
    hw["p_rank"] = cert.p_rank_value;
    hw["nilpotent"] = cert.p_rank_value == 0;
    return hw;
}

json l_poly_obj(const curve::SupersingularityCertificate& cert) {
    if (!cert.has_l) return json(nullptr);
    json lp;
    lp["coeffs"] = cert.l_coeffs;
    std::vector<std::string> slopes;
    slopes.reserve(cert.slopes.size());
    for (const auto& s : cert.slopes) slopes.push_back(curve::slope_string(s));
    lp["slopes"] = slopes;
    return lp;
}

}  // namespace

std::string galois_doc(const Inputs& in, const galois::GaloisVerdict& v, double timings_ms) {
    json j = base_seeded(in);
    j["verdict"] = galois::status_name(v.status);
    j["note"] = v.status == galois::GaloisStatus::Inconclusive ? json(nullptr)
                                                               : json(galois::kCertificationNote);
    j["evidence"] = evidence_obj(v);
    j["stats"] = stats_obj(v.stats);
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string morse_doc(const Inputs& in, bool verdict, double timings_ms) {
    json j = base(in);
    j["verdict"] = verdict;
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string curve_doc(const Inputs& in, const curve::SupersingularityCertificate& cert,
                      double timings_ms) {
    json j = base_seeded(in);
    j["verdict"] = curve::verdict_name(cert.verdict);
    j["hasse_witt"] = hasse_witt_obj(cert);
    j["l_poly"] = l_poly_obj(cert);
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string curve_batch_doc(const Inputs& in, u64 index, u64 z0,
                            const curve::SupersingularityCertificate& cert) {
    json j = base_seeded(in);
    j["mode"] = "specialization";
    j["index"] = index;
    j["z0"] = z0;
    j["verdict"] = curve::verdict_name(cert.verdict);
    j["hasse_witt"] = hasse_witt_obj(cert);
    j["l_poly"] = l_poly_obj(cert);
    return j.dump();
}

std::string curve_batch_skip_doc(const Inputs& in, u64 index, u64 z0, const char* reason) {
    json j = base_seeded(in);
    j["mode"] = "specialization";
    j["index"] = index;
    j["z0"] = z0;
    j["verdict"] = reason;
    j["hasse_witt"] = nullptr;
    j["l_poly"] = nullptr;
    return j.dump();
}

std::string curve_batch_summary(const Inputs& in, u64 draws, u64 squarefree, u64 refuted,
                                double timings_ms) {
    json j = base_seeded(in);
    j["mode"] = "summary";
    j["draws"] = draws;
    j["squarefree"] = squarefree;
    j["refuted"] = refuted;
    j["refuted_fraction"] = squarefree ? static_cast<double>(refuted) / squarefree : 0.0;
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string family_doc(const Inputs& in, const families::FamilySpec& spec,
                       const ff::BivarPoly& built, double timings_ms) {
    json j = base(in);
    j["kind"] = families::family_kind_name(spec.kind);
    json params;
    switch (spec.kind) {
        case families::FamilyKind::MoriOdd:
        case families::FamilyKind::EvenTheorem:
            params["g"] = spec.g;
            break;
        case families::FamilyKind::Abhyankar:
            params["q"] = spec.q;
            params["t"] = spec.t;
            break;
        case families::FamilyKind::MorseShift:
            params["h"] = ff::poly_to_string(spec.field, spec.h);
            break;
    }
    j["params"] = params;
    j["built"] = ff::canonical_string(built);
    j["deg_x"] = built.deg_x();
    j["verdict"] = "Built";
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string hypotheses_doc(const Inputs& in, const families::HypothesisReport& r,
                           double timings_ms) {
    json j = base_seeded(in);
    json checks;
    checks["p_odd"] = r.p_odd;
    checks["n_even_ge_10"] = r.n_even_ge_10;
    checks["separable"] = r.separable;
    checks["irreducible"] = r.irreducible_evidence.has_value();
    checks["galois"] = galois::status_name(r.galois.status);
    j["checks"] = checks;
    j["evidence"] = evidence_obj(r.galois);
    j["stats"] = stats_obj(r.galois.stats);
    j["verdict"] = r.theorem_applies;
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string dyadic_doc(const Inputs& in, const rep::DyadicExpansion& d) {
    json j = base(in);
    j["mode"] = "dyadic";
    j["n"] = d.n;
    j["s"] = d.s;
    j["w"] = d.w;
    return j.dump();
}

std::string property_b_doc(const Inputs& in, const rep::PropertyBReport& r) {
    json j = base(in);
    j["mode"] = "check-b";
    j["n"] = r.n;
    j["g"] = r.g;
    j["s"] = r.s;
    j["bound_log2"] = r.bound_log2;
    j["branch"] = rep::branch_name(r.branch);
    j["verdict"] = r.verdict;
    j["audit"] = r.audit;
    return j.dump();
}

std::string property_b_summary(const Inputs& in, u64 count, bool all_true, double timings_ms) {
    json j = base(in);
    j["mode"] = "summary";
    j["count"] = count;
    j["all_true"] = all_true;
    j["verdict"] = all_true;
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string tail_doc(const Inputs& in, u32 n, bool holds) {
    json j = base(in);
    j["mode"] = "tail";
    j["n"] = n;
    j["verdict"] = holds;
    return j.dump();
}

std::string tail_summary(const Inputs& in, u64 count, bool all_true, double timings_ms) {
    json j = base(in);
    j["mode"] = "summary";
    j["count"] = count;
    j["all_true"] = all_true;
    j["verdict"] = all_true;
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string repan_doc(const Inputs& in, const rep::RepAnReport& r, double timings_ms) {
    json j = base(in);
    j["mode"] = "repAn";
    j["n"] = r.n;
    j["g"] = r.g;
    j["char0_min_degree"] = r.char0_min_degree;
    j["char0_exceeds_2g"] = r.char0_exceeds_2g;
    j["char2_min_degree"] = r.char2_min_degree;
    j["axiom_a"] = r.axiom_a;
    j["axiom_c"] = r.axiom_c;
    json b;
    b["branch"] = rep::branch_name(r.b.branch);
    b["bound_log2"] = r.b.bound_log2;
    b["verdict"] = r.b.verdict;
    b["audit"] = r.b.audit;
    j["property_b"] = b;
    j["verdict"] = r.char0_exceeds_2g && r.b.verdict;
    j["timings_ms"] = timings_ms;
    return j.dump();
}

std::string error_doc(const std::string& command, const Error& e) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    json err;
    err["kind"] = error_kind_name(e.kind());
    err["message"] = e.what();
    if (e.kind() == ErrorKind::Syntax) err["offset"] = e.offset();
    j["error"] = err;
    return j.dump();
}

}  // namespace hyperjac::report
