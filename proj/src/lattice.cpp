#include "seshadri/lattice.hpp"

#include <deque>
#include <set>

#include "seshadri/errors.hpp"
#include "seshadri/normal_form.hpp"

namespace seshadri::lattice {

using RationalMatrix = std::array<std::array<Rational, 4>, 4>;

PolarizedSurface::PolarizedSurface(Integer d) : d_(std::move(d)) {
    if (d_ < 1) throw InputError("polarization degree d must be >= 1, got " + d_.get_str());
}

LatticeVector LatticeVector::basis(std::size_t i) {
    LatticeVector v;
    v.coords.at(i) = 1;
    return v;
}

LatticeVector LatticeVector::canonical() const {
    LatticeVector out;
    for (std::size_t i = 0; i < 4; ++i) out.coords[i] = coords[i].frac();
    return out;
}

bool LatticeVector::is_integral() const {
    for (const auto& c : coords) {
        if (!c.is_integer()) return false;
    }
    return true;
}

bool LatticeVector::is_zero() const {
    for (const auto& c : coords) {
        if (!c.is_zero()) return false;
    }
    return true;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    for (std::size_t i = 0; i < 4; ++i) coords[i] += o.coords[i];
    return *this;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out;
    for (std::size_t i = 0; i < 4; ++i) out.coords[i] = a.coords[i] - b.coords[i];
    return out;
}

LatticeVector operator*(const Rational& s, const LatticeVector& v) {
    LatticeVector out;
    for (std::size_t i = 0; i < 4; ++i) out.coords[i] = s * v.coords[i];
    return out;
}

SubgroupPresentation::SubgroupPresentation(PolarizedSurface surface, std::vector<LatticeVector> generators)
    : surface_(std::move(surface)), generators_(std::move(generators)) {
    for (auto& g : generators_) g = g.canonical();
}

namespace {

Rational determinant(RationalMatrix m) {
    Rational det = 1;
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t p = c;
        while (p < 4 && m[p][c].is_zero()) ++p;
        if (p == 4) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < 4; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < 4; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

RationalMatrix inverse(RationalMatrix m) {
    RationalMatrix inv{};
    for (std::size_t i = 0; i < 4; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t p = c;
        while (p < 4 && m[p][c].is_zero()) ++p;
        if (p == 4) throw InvariantError("singular superlattice basis");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        const Rational pivot = m[c][c];
        for (std::size_t j = 0; j < 4; ++j) {
            m[c][j] /= pivot;
            inv[c][j] /= pivot;
        }
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            const Rational f = m[r][c];
            for (std::size_t j = 0; j < 4; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RationalMatrix as_matrix(const SuperlatticeBasis& b) {
    RationalMatrix m;
    for (std::size_t i = 0; i < 4; ++i) m[i] = b.rows[i].coords;
    return m;
}

}  // namespace

Rational SuperlatticeBasis::determinant() const { return lattice::determinant(as_matrix(*this)); }

Rational form_value(const PolarizedSurface& s, const LatticeVector& v, const LatticeVector& w) {
    const auto& a = v.coords;
    const auto& b = w.coords;
    const Rational d(s.d());
    return (a[0] * b[2] - a[2] * b[0]) + d * (a[1] * b[3] - a[3] * b[1]);
}

SuperlatticeBasis superlattice(const SubgroupPresentation& g) {
    std::vector<Rational> coords;
    for (const auto& gen : g.generators()) {
        coords.insert(coords.end(), gen.coords.begin(), gen.coords.end());
    }
    const Integer scale = lcm_of_denominators(coords);

    IntMatrix rows;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Integer> row(4, Integer(0));
        row[i] = scale;
        rows.push_back(std::move(row));
    }
    for (const auto& gen : g.generators()) {
        std::vector<Integer> row(4);
        for (std::size_t j = 0; j < 4; ++j) row[j] = (gen.coords[j] * Rational(scale)).num();
        rows.push_back(std::move(row));
    }

    const IntMatrix hnf = hermite_normal_form(std::move(rows));
    if (hnf.size() != 4) throw InvariantError("superlattice has rank != 4");
    SuperlatticeBasis basis;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) basis.rows[i].coords[j] = Rational::reduce(hnf[i][j], scale);
    }
    return basis;
}

SubgroupInvariants quotient_invariants(const SuperlatticeBasis& b) {
    // Rows of inv(B) express lambda1..mu2 in the basis of Lambda'.
    const RationalMatrix coeffs = inverse(as_matrix(b));
    IntMatrix m(4, std::vector<Integer>(4));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (!coeffs[i][j].is_integer()) throw InvariantError("Lambda is not contained in Lambda'");
            m[i][j] = coeffs[i][j].num();
        }
    }

    SubgroupInvariants inv{1, 1, {}};
    for (auto& f : smith_diagonal(std::move(m))) {
        if (f == 0) throw InvariantError("Lambda'/Lambda is infinite");
        if (f == 1) continue;
        inv.order *= f;
        inv.invariant_factors.push_back(f);
    }
    if (!inv.invariant_factors.empty()) inv.exponent = inv.invariant_factors.back();
    return inv;
}

bool k_of_L_contains(const PolarizedSurface& s, const LatticeVector& v) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (!form_value(s, v, LatticeVector::basis(i)).is_integer()) return false;
    }
    return true;
}

std::vector<LatticeVector> enumerate_subgroup(const SubgroupPresentation& g, std::size_t cap) {
    std::set<LatticeVector> seen{LatticeVector{}};
    std::deque<LatticeVector> frontier{LatticeVector{}};
    while (!frontier.empty()) {
        const LatticeVector x = frontier.front();
        frontier.pop_front();
        for (const auto& gen : g.generators()) {
            LatticeVector y = (x + gen).canonical();
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw InputError("subgroup too large for enumeration");
                frontier.push_back(std::move(y));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

RationalMatrix restricted_gram(const PolarizedSurface& s, const SuperlatticeBasis& b) {
    RationalMatrix gram;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) gram[i][j] = form_value(s, b.rows[i], b.rows[j]);
    }
    return gram;
}

SubgroupPresentation torsion_presentation(const PolarizedSurface& s, const Integer& m) {
    if (m < 1) throw InputError("torsion order m must be >= 1");
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < 4; ++i) gens.push_back(Rational::reduce(1, m) * LatticeVector::basis(i));
    return SubgroupPresentation(s, std::move(gens));
}

}  // namespace seshadri::lattice
