// One-line JSON documents for every subcommand: sorted keys, stable field
// sets, integers in [0, p), so identical inputs serialize to identical bytes
// (timings excepted; golden tests mask them).
#pragma once

#include <string>

#include "hyperjac/cartier_manin.hpp"
#include "hyperjac/families.hpp"
#include "hyperjac/galois_scan.hpp"
#include "hyperjac/rep_bounds.hpp"

namespace hyperjac::report {

using ff::u32;
using ff::u64;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct Inputs {
    std::string command;
    u64 p = 0;
    std::string poly;  // canonical source form
    u64 seed = 0;
    u64 budget = 0;
};

std::string galois_doc(const Inputs& in, const galois::GaloisVerdict& v, double timings_ms);
std::string morse_doc(const Inputs& in, bool verdict, double timings_ms);

// Single-curve hw / lpoly document.
std::string curve_doc(const Inputs& in, const curve::SupersingularityCertificate& cert,
                      double timings_ms);
// Batch mode over specializations of a family: one document per z0 plus a
// summary carrying the observed refutation fraction.
std::string curve_batch_doc(const Inputs& in, u64 index, u64 z0,
                            const curve::SupersingularityCertificate& cert);
std::string curve_batch_skip_doc(const Inputs& in, u64 index, u64 z0, const char* reason);
std::string curve_batch_summary(const Inputs& in, u64 draws, u64 squarefree, u64 refuted,
                                double timings_ms);

std::string family_doc(const Inputs& in, const families::FamilySpec& spec,
                       const ff::BivarPoly& built, double timings_ms);
std::string hypotheses_doc(const Inputs& in, const families::HypothesisReport& r,
                           double timings_ms);

std::string dyadic_doc(const Inputs& in, const rep::DyadicExpansion& d);
std::string property_b_doc(const Inputs& in, const rep::PropertyBReport& r);
std::string property_b_summary(const Inputs& in, u64 count, bool all_true, double timings_ms);
std::string tail_doc(const Inputs& in, u32 n, bool holds);
std::string tail_summary(const Inputs& in, u64 count, bool all_true, double timings_ms);
std::string repan_doc(const Inputs& in, const rep::RepAnReport& r, double timings_ms);

std::string error_doc(const std::string& command, const Error& e);

}  // namespace hyperjac::report
