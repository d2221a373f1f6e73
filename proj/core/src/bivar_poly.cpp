#include "hyperjac/bivar_poly.hpp"

#include <tuple>

#include "hyperjac/poly.hpp"

namespace hyperjac::ff {

namespace {
const FpPoly kZeroPoly{};
}

BivarPoly::BivarPoly(PrimeField field, std::vector<FpPoly> coeffs_in_z)
    : F_(field), cz_(std::move(coeffs_in_z)) {
    for (auto& c : cz_) pk::normalize(F_, c);
    while (!cz_.empty() && cz_.back().empty()) cz_.pop_back();
}

const FpPoly& BivarPoly::coeff(std::size_t i) const {
    return i < cz_.size() ? cz_[i] : kZeroPoly;
}

int BivarPoly::deg_x() const {
    if (cz_.empty()) throw Error(ErrorKind::Value, "deg_x of the zero polynomial");
    return static_cast<int>(cz_.size()) - 1;
}

int BivarPoly::deg_z() const {
    if (cz_.empty()) throw Error(ErrorKind::Value, "deg_z of the zero polynomial");
    int d = 0;
    for (const auto& c : cz_)
        if (!c.empty()) d = std::max(d, static_cast<int>(c.size()) - 1);
    return d;
}

bool BivarPoly::monic_in_x() const {
    if (cz_.empty()) return false;
    return cz_.back().size() == 1 && cz_.back()[0] == 1;
}

bool BivarPoly::constant_in_z() const {
    for (const auto& c : cz_)
        if (c.size() > 1) return false;
    return true;
}

FpPoly BivarPoly::specialize(u64 z0) const {
    FpPoly r(cz_.size(), 0);
    for (std::size_t i = 0; i < cz_.size(); ++i) r[i] = pk::eval(F_, cz_[i], z0);
    pk::normalize(F_, r);
    return r;
}

PolyOf<ExtField> BivarPoly::specialize_ext(const ExtField& E,
                                           const ExtField::Element& z0) const {
    if (E.p() != F_.p())
        throw Error(ErrorKind::Value, "specialize_ext: mismatched characteristic");
    PolyOf<ExtField> r(cz_.size(), E.zero());
    for (std::size_t i = 0; i < cz_.size(); ++i) {
        ExtField::Element acc = E.zero();
        for (std::size_t j = cz_[i].size(); j-- > 0;)
            acc = E.add(E.mul(acc, z0), E.embed(cz_[i][j]));
        r[i] = std::move(acc);
    }
    pk::normalize(E, r);
    return r;
}

BivarPoly make_bivar(const PrimeField& F, const std::vector<std::tuple<u32, u32, i64>>& terms) {
    std::size_t nx = 0;
    for (const auto& [i, j, c] : terms) nx = std::max(nx, static_cast<std::size_t>(i) + 1);
    std::vector<FpPoly> cz(nx);
    for (const auto& [i, j, c] : terms) {
        auto& row = cz[i];
        if (row.size() <= j) row.resize(j + 1, 0);
        row[j] = F.add(row[j], F.from_int(c));
    }
    return BivarPoly(F, std::move(cz));
}

BivarPoly lift_univariate(const PrimeField& F, const FpPoly& fx) {
    std::vector<FpPoly> cz(fx.size());
    for (std::size_t i = 0; i < fx.size(); ++i)
        if (fx[i] != 0) cz[i] = FpPoly{fx[i]};
    return BivarPoly(F, std::move(cz));
}

FpPoly disc_z(const BivarPoly& F) {
    if (F.is_zero()) throw Error(ErrorKind::Value, "disc_z of the zero polynomial");
    if (!F.monic_in_x()) throw Error(ErrorKind::NotMonic, "disc_z requires a polynomial monic in x");
    const int n = F.deg_x();
    if (n < 2) throw Error(ErrorKind::Value, "disc_z needs deg_x >= 2");
    const auto& P = F.field();

    // deg_z of the discriminant is at most (2n-1) * deg_z(F): the Sylvester
    // matrix of (F, dF/dx) is (2n-1) x (2n-1) with entries of that z-degree.
    const u64 bound = static_cast<u64>(2 * n - 1) * static_cast<u64>(F.deg_z());
    const u64 npoints = bound + 1;

    if (npoints <= P.p()) {
        std::vector<u64> xs(npoints), ys(npoints);
        for (u64 j = 0; j < npoints; ++j) {
            xs[j] = j;
            ys[j] = pk::discriminant(P, F.specialize(j));
        }
        auto r = pk::interpolate(P, xs, ys);
        return r;
    }

    u32 k = 1;
    unsigned __int128 q = P.p();
    while (q < npoints) {
        ++k;
        q *= P.p();
        if (k > 12)
            throw Error(ErrorKind::CapExceeded, "disc_z interpolation needs an extension beyond degree 12");
    }
    ExtField E = make_ext_field(P.p(), k);
    std::vector<ExtField::Element> xs(npoints), ys(npoints);
    for (u64 j = 0; j < npoints; ++j) {
        xs[j] = E.element_from_index(j);
        ys[j] = pk::discriminant(E, F.specialize_ext(E, xs[j]));
    }
    auto interp = pk::interpolate(E, xs, ys);
    FpPoly out(interp.size(), 0);
    for (std::size_t i = 0; i < interp.size(); ++i) {
        if (!E.is_base(interp[i]))
            throw Error(ErrorKind::Internal, "disc_z descent left a non-base coefficient");
        out[i] = E.to_base(interp[i]);
    }
    pk::normalize(P, out);
    return out;
}

}  // namespace hyperjac::ff
