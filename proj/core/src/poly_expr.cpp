#include "hyperjac/poly_expr.hpp"

#include <cctype>
#include <tuple>

namespace hyperjac::ff {

namespace {

constexpr u64 kMaxExponent = 1'000'000;

class Parser {
public:
    Parser(const std::string& text, const PrimeField& F) : s_(text), F_(F) {}

    ParsedPoly run() {
        std::vector<std::tuple<u32, u32, i64>> terms;
        term(false, terms);
        for (;;) {
            skip_ws();
            if (pos_ == s_.size()) break;
            const char c = s_[pos_];
            if (c == '+' || c == '-') {
                ++pos_;
                term(c == '-', terms);
            } else if (c == '(' || c == ')') {
                throw Error(ErrorKind::Unsupported, "parentheses are not part of the grammar",
                            pos_);
            } else {
                throw Error(ErrorKind::Syntax, "expected '+' or '-'", pos_);
            }
        }
        ParsedPoly out{make_bivar(F_, terms), saw_z_};
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_digit() {
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    u64 integer() {
        const std::size_t start = pos_;
        u64 v = 0;
        while (at_digit()) {
            const u64 d = static_cast<u64>(s_[pos_] - '0');
            if (v > (~u64{0} - d) / 10)
                throw Error(ErrorKind::Syntax, "integer literal too large", start);
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    // varpow := ('x'|'z') ['^' integer]; returns (is_z, exponent)
    std::pair<bool, u64> varpow() {
        const bool is_z = s_[pos_] == 'z';
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            if (!at_digit()) throw Error(ErrorKind::Syntax, "expected an exponent", pos_);
            const std::size_t at = pos_;
            const u64 e = integer();
            if (e > kMaxExponent)
                throw Error(ErrorKind::Unsupported, "exponent beyond supported degree", at);
            return {is_z, e};
        }
        return {is_z, 1};
    }

    void term(bool negative, std::vector<std::tuple<u32, u32, i64>>& terms) {
        skip_ws();
        if (pos_ == s_.size()) throw Error(ErrorKind::Syntax, "expected a term", pos_);
        if (s_[pos_] == '(')
            throw Error(ErrorKind::Unsupported, "parentheses are not part of the grammar", pos_);

        u64 coeff = 1;
        bool have_var = false;
        if (at_digit()) {
            coeff = integer();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (pos_ == s_.size() || (s_[pos_] != 'x' && s_[pos_] != 'z'))
                    throw Error(ErrorKind::Syntax, "expected a variable after '*'", pos_);
                have_var = true;
            }
        } else if (s_[pos_] == 'x' || s_[pos_] == 'z') {
            have_var = true;
        } else {
            throw Error(ErrorKind::Syntax, "expected a term", pos_);
        }

        u64 xe = 0, ze = 0;
        if (have_var) {
            bool seen_x = false, seen_z = false;
            for (;;) {
                const std::size_t at = pos_;
                auto [is_z, e] = varpow();
                if (is_z) {
                    if (seen_z)
                        throw Error(ErrorKind::Unsupported, "variable z repeated in term", at);
                    seen_z = true;
                    ze = e;
                    saw_z_ = true;
                } else {
                    if (seen_x)
                        throw Error(ErrorKind::Unsupported, "variable x repeated in term", at);
                    seen_x = true;
                    xe = e;
                }
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == '*') {
                    const std::size_t star = pos_;
                    ++pos_;
                    skip_ws();
                    if (pos_ == s_.size() || (s_[pos_] != 'x' && s_[pos_] != 'z'))
                        throw Error(ErrorKind::Syntax, "expected a variable after '*'",
                                    pos_ == s_.size() ? star + 1 : pos_);
                    continue;
                }
                break;
            }
        }

        u64 c = coeff % F_.p();
        if (negative) c = c == 0 ? 0 : F_.p() - c;
        terms.push_back({static_cast<u32>(xe), static_cast<u32>(ze), static_cast<i64>(c)});
    }

    const std::string& s_;
    const PrimeField& F_;
    std::size_t pos_ = 0;
    bool saw_z_ = false;
};

}  // namespace

FpPoly ParsedPoly::univariate() const {
    if (uses_z) throw Error(ErrorKind::Value, "polynomial involves z");
    const auto& cz = poly.coeffs();
    FpPoly f(cz.size(), 0);
    for (std::size_t i = 0; i < cz.size(); ++i)
        if (!cz[i].empty()) f[i] = cz[i][0];
    return f;
}

ParsedPoly parse_poly(const std::string& text, const PrimeField& F) {
    return Parser(text, F).run();
}

std::string canonical_string(const BivarPoly& F) {
    if (F.is_zero()) return "0";
    std::string out;
    const auto& cz = F.coeffs();
    for (std::size_t i = cz.size(); i-- > 0;) {
        const auto& row = cz[i];
        for (std::size_t j = row.size(); j-- > 0;) {
            if (row[j] == 0) continue;
            if (!out.empty()) out += " + ";
            const bool has_var = i > 0 || j > 0;
            if (row[j] != 1 || !has_var) {
                out += std::to_string(row[j]);
                if (has_var) out += '*';
            }
            if (i > 0) {
                out += 'x';
                if (i > 1) {
                    out += '^';
                    out += std::to_string(i);
                }
                if (j > 0) out += '*';
            }
            if (j > 0) {
                out += 'z';
                if (j > 1) {
                    out += '^';
                    out += std::to_string(j);
                }
            }
        }
    }
    return out;
}

}  // namespace hyperjac::ff
