#pragma once

#include <string>
#include <vector>

#include "torint/potential.hpp"

namespace torint::catalog {

// Frequencies are written a + b*sqrt(3) per coordinate where needed.

namespace detail {

inline QuadExt q3(long a, long b) { return b == 0 ? QuadExt(a) : QuadExt(Rat(a), Rat(b), 3); }

inline Frequency f2(long a1, long b1, long a2, long b2) {
    return Frequency({q3(a1, b1), q3(a2, b2)});
}
inline Frequency f3(long x, long y, long z) {
    return Frequency({QuadExt(x), QuadExt(y), QuadExt(z)});
}

inline RatFun alpha() { return RatFun::parameter("alpha"); }
inline RatFun beta() { return RatFun::parameter("beta"); }
inline RatFun c(long v) { return RatFun(v); }
inline RatFun c3(long v) { return RatFun(QuadExt(Rat(0), Rat(v), 3)); }  // v*sqrt(3)

struct T {
    RatFun coeff;
    std::vector<unsigned> pexp;
    Frequency freq;
};

inline PhasePolynomial build(size_t n, const std::vector<T>& terms) {
    PhasePolynomial r(n);
    for (auto& t : terms) r.add_term(t.pexp, t.freq, t.coeff);
    return r;
}

}  // namespace detail

inline std::vector<std::string> hamiltonian_ids() {
    return {"H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8"};
}
inline std::vector<std::string> edge_system_ids() { return {"E1", "E2", "E3"}; }

/// Catalog potentials (real normal form).  Also accepts "eq1", the
/// five-term potential that fails exactly the fourth screening condition.
inline Potential potential(const std::string& id) {
    using namespace detail;
    if (id == "H1") {
        Potential V(2, 3);
        V.add_term(f2(2, 0, 0, 0), c(1));
        V.add_term(f2(-1, 0, 0, 1), c(1));
        V.add_term(f2(-1, 0, 0, -1), c(1));
        return V;
    }
    if (id == "H2") {
        Potential V(2);
        V.add_term(f2(2, 0, 0, 0), c(1));
        V.add_term(f2(0, 0, 2, 0), c(1));
        V.add_term(f2(-2, 0, -2, 0), c(1));
        V.add_term(f2(-1, 0, -1, 0), alpha());
        return V;
    }
    if (id == "H3") {
        Potential V(2);
        V.add_term(f2(2, 0, 0, 0), c(1));
        V.add_term(f2(0, 0, 2, 0), c(1));
        V.add_term(f2(-1, 0, -1, 0), c(1));
        V.add_term(f2(1, 0, 0, 0), alpha());
        V.add_term(f2(0, 0, 1, 0), beta());
        return V;
    }
    if (id == "H4") {
        Potential V(2, 3);
        V.add_term(f2(2, 0, 0, 0), c(1));
        V.add_term(f2(0, 0, 0, 2), c(1));
        V.add_term(f2(-1, 0, 0, -1), c(1));
        return V;
    }
    if (id == "H5") {
        Potential V(2, 3);
        V.add_term(f2(0, 2, 0, 0), c(1));
        V.add_term(f2(0, 0, 2, 0), c(1));
        V.add_term(f2(0, -1, -3, 0), c(1));
        return V;
    }
    if (id == "H6") {
        Potential V(3);
        V.add_term(f3(1, 1, 0), c(1));
        V.add_term(f3(0, -1, 1), c(1));
        V.add_term(f3(0, -1, -1), c(1));
        V.add_term(f3(-1, 1, 0), c(1));
        return V;
    }
    if (id == "H7") {
        Potential V(3);
        V.add_term(f3(2, 0, 0), c(1));
        V.add_term(f3(-1, 1, 0), c(1));
        V.add_term(f3(0, -1, -1), c(1));
        V.add_term(f3(0, -1, 1), c(1));
        V.add_term(f3(1, 0, 0), alpha());
        return V;
    }
    if (id == "H8") {
        Potential V(3);
        V.add_term(f3(2, 0, 0), c(1));
        V.add_term(f3(-1, 1, 0), c(1));
        V.add_term(f3(0, -1, 1), c(1));
        V.add_term(f3(0, 0, -2), c(1));
        V.add_term(f3(1, 0, 0), alpha());
        V.add_term(f3(0, 0, -1), beta());
        return V;
    }
    if (id == "eq1") {
        Potential V(2, 3);
        V.add_term(f2(6, 0, 0, 0), c(1));
        V.add_term(f2(4, 0, 0, 0), c(1));
        V.add_term(f2(2, 0, 0, 0), c(1));
        V.add_term(f2(0, 2, 0, 0), c(1));
        V.add_term(f2(-3, 0, 0, -1), c(1));
        return V;
    }
    throw invalid_input("unknown catalog id: " + id);
}

/// Published higher first integrals: H6/H7/H8 each carry a quartic-type I
/// and a sextic-type J; the others return an empty list.
inline std::vector<PhasePolynomial> integrals(const std::string& id) {
    using namespace detail;
    if (id == "H6") {
        PhasePolynomial I6 = build(3, {
            {c(1), {1, 1, 1}, f3(0, 0, 0)},
            {c(-1), {0, 0, 1}, f3(-1, 1, 0)},
            {c(1), {0, 0, 1}, f3(1, 1, 0)},
            {c(-1), {1, 0, 0}, f3(0, -1, 1)},
            {c(1), {1, 0, 0}, f3(0, -1, -1)},
        });
        PhasePolynomial J6 = build(3, {
            {c(1), {4, 0, 0}, f3(0, 0, 0)},
            {c(1), {0, 4, 0}, f3(0, 0, 0)},
            {c(1), {0, 0, 4}, f3(0, 0, 0)},
            {c(4), {0, 0, 2}, f3(0, -1, -1)},
            {c(4), {0, 0, 2}, f3(0, -1, 1)},
            {c(4), {0, 1, 1}, f3(0, -1, 1)},
            {c(-4), {0, 1, 1}, f3(0, -1, -1)},
            {c(4), {0, 2, 0}, f3(0, -1, -1)},
            {c(4), {0, 2, 0}, f3(-1, 1, 0)},
            {c(4), {0, 2, 0}, f3(1, 1, 0)},
            {c(4), {0, 2, 0}, f3(0, -1, 1)},
            {c(4), {1, 1, 0}, f3(-1, 1, 0)},
            {c(-4), {1, 1, 0}, f3(1, 1, 0)},
            {c(4), {2, 0, 0}, f3(-1, 1, 0)},
            {c(4), {2, 0, 0}, f3(1, 1, 0)},
            {c(4), {0, 0, 0}, f3(1, 0, 1)},
            {c(4), {0, 0, 0}, f3(1, 0, -1)},
            {c(4), {0, 0, 0}, f3(-1, 0, 1)},
            {c(4), {0, 0, 0}, f3(-1, 0, -1)},
            {c(2), {0, 0, 0}, f3(2, 2, 0)},
            {c(2), {0, 0, 0}, f3(-2, 2, 0)},
            {c(2), {0, 0, 0}, f3(0, -2, -2)},
            {c(2), {0, 0, 0}, f3(0, -2, 2)},
            {c(12), {0, 0, 0}, f3(0, 2, 0)},
            {c(12), {0, 0, 0}, f3(0, -2, 0)},
        });
        return {I6, J6};
    }
    if (id == "H7") {
        RatFun a = alpha();
        PhasePolynomial I7 = build(3, {
            {c(1), {4, 0, 0}, f3(0, 0, 0)},
            {c(1), {0, 4, 0}, f3(0, 0, 0)},
            {c(1), {0, 0, 4}, f3(0, 0, 0)},
            {a * 4, {2, 0, 0}, f3(1, 0, 0)},
            {c(4), {2, 0, 0}, f3(2, 0, 0)},
            {c(4), {2, 0, 0}, f3(-1, 1, 0)},
            {c(4), {1, 1, 0}, f3(-1, 1, 0)},
            {c(4), {0, 2, 0}, f3(-1, 1, 0)},
            {c(4), {0, 2, 0}, f3(0, -1, 1)},
            {c(4), {0, 2, 0}, f3(0, -1, -1)},
            {c(4), {0, 1, 1}, f3(0, -1, 1)},
            {c(-4), {0, 1, 1}, f3(0, -1, -1)},
            {c(4), {0, 0, 2}, f3(0, -1, 1)},
            {c(4), {0, 0, 2}, f3(0, -1, -1)},
            {a * a * 4, {0, 0, 0}, f3(2, 0, 0)},
            {a * 4, {0, 0, 0}, f3(0, 1, 0)},
            {a * 8, {0, 0, 0}, f3(3, 0, 0)},
            {c(2), {0, 0, 0}, f3(-2, 2, 0)},
            {c(2), {0, 0, 0}, f3(0, -2, -2)},
            {c(2), {0, 0, 0}, f3(0, -2, 2)},
            {c(8), {0, 0, 0}, f3(1, 1, 0)},
            {c(4), {0, 0, 0}, f3(-1, 0, 1)},
            {c(4), {0, 0, 0}, f3(-1, 0, -1)},
            {c(12), {0, 0, 0}, f3(0, -2, 0)},
            {c(4), {0, 0, 0}, f3(4, 0, 0)},
        });
        PhasePolynomial J7 = build(3, {
            {c(1), {2, 2, 2}, f3(0, 0, 0)},
            {c(2), {2, 1, 1}, f3(0, -1, -1)},
            {c(-2), {2, 1, 1}, f3(0, -1, 1)},
            {c(-2), {1, 1, 2}, f3(-1, 1, 0)},
            {a * 2, {0, 2, 2}, f3(1, 0, 0)},
            {c(2), {0, 2, 2}, f3(2, 0, 0)},
            {c(1), {2, 0, 0}, f3(0, -2, 2)},
            {c(1), {2, 0, 0}, f3(0, -2, -2)},
            {c(-2), {2, 0, 0}, f3(0, -2, 0)},
            {c(2), {1, 0, 1}, f3(-1, 0, 1)},
            {c(-2), {1, 0, 1}, f3(-1, 0, -1)},
            {a * 4, {0, 1, 1}, f3(1, -1, -1)},
            {c(4), {0, 1, 1}, f3(2, -1, -1)},
            {a * -4, {0, 1, 1}, f3(1, -1, 1)},
            {c(-4), {0, 1, 1}, f3(2, -1, 1)},
            {c(1), {0, 0, 2}, f3(-2, 2, 0)},
            {a * 2, {0, 0, 2}, f3(0, 1, 0)},
            {a * 2, {0, 0, 0}, f3(0, 0, 1)},
            {a * 2, {0, 0, 0}, f3(0, 0, -1)},
            {a * 2, {0, 0, 0}, f3(1, -2, 2)},
            {a * 2, {0, 0, 0}, f3(1, -2, -2)},
            {a * -4, {0, 0, 0}, f3(1, -2, 0)},
            {c(-4), {0, 0, 0}, f3(2, -2, 0)},
            {c(2), {0, 0, 0}, f3(2, -2, 2)},
            {c(2), {0, 0, 0}, f3(2, -2, -2)},
        });
        return {I7, J7};
    }
    if (id == "H8") {
        RatFun a = alpha(), b = beta();
        PhasePolynomial I8 = build(3, {
            {c(1), {4, 0, 0}, f3(0, 0, 0)},
            {c(1), {0, 4, 0}, f3(0, 0, 0)},
            {c(1), {0, 0, 4}, f3(0, 0, 0)},
            {a * 4, {2, 0, 0}, f3(1, 0, 0)},
            {c(4), {2, 0, 0}, f3(2, 0, 0)},
            {b * b * -2, {2, 0, 0}, f3(0, 0, 0)},
            {c(4), {2, 0, 0}, f3(-1, 1, 0)},
            {c(4), {1, 1, 0}, f3(-1, 1, 0)},
            {c(4), {0, 2, 0}, f3(-1, 1, 0)},
            {b * b * -2, {0, 2, 0}, f3(0, 0, 0)},
            {c(4), {0, 2, 0}, f3(0, -1, 1)},
            {c(4), {0, 1, 1}, f3(0, -1, 1)},
            {c(4), {0, 0, 2}, f3(0, 0, -2)},
            {b * b * -2, {0, 0, 2}, f3(0, 0, 0)},
            {c(4), {0, 0, 2}, f3(0, -1, 1)},
            {b * 4, {0, 0, 2}, f3(0, 0, -1)},
            {a * b * b * -4, {0, 0, 0}, f3(1, 0, 0)},
            {b * b * b * -4, {0, 0, 0}, f3(0, 0, -1)},
            {a * a * 4, {0, 0, 0}, f3(2, 0, 0)},
            {b * b * -4, {0, 0, 0}, f3(2, 0, 0)},
            {b * b * -4, {0, 0, 0}, f3(-1, 1, 0)},
            {b * b * -4, {0, 0, 0}, f3(0, -1, 1)},
            {a * 4, {0, 0, 0}, f3(0, 1, 0)},
            {b * 8, {0, 0, 0}, f3(0, 0, -3)},
            {a * 8, {0, 0, 0}, f3(3, 0, 0)},
            {b * 4, {0, 0, 0}, f3(0, -1, 0)},
            {c(4), {0, 0, 0}, f3(4, 0, 0)},
            {c(4), {0, 0, 0}, f3(0, 0, -4)},
            {c(2), {0, 0, 0}, f3(-2, 2, 0)},
            {c(2), {0, 0, 0}, f3(0, -2, 2)},
            {c(8), {0, 0, 0}, f3(1, 1, 0)},
            {c(8), {0, 0, 0}, f3(0, -1, -1)},
            {c(4), {0, 0, 0}, f3(-1, 0, 1)},
        });
        PhasePolynomial J8 = build(3, {
            {c(1), {2, 2, 2}, f3(0, 0, 0)},
            {b * 2, {2, 2, 0}, f3(0, 0, -1)},
            {c(2), {2, 2, 0}, f3(0, 0, -2)},
            {c(-2), {2, 1, 1}, f3(0, -1, 1)},
            {c(-2), {1, 1, 2}, f3(-1, 1, 0)},
            {a * 2, {0, 2, 2}, f3(1, 0, 0)},
            {c(2), {0, 2, 2}, f3(2, 0, 0)},
            {b * 2, {2, 0, 0}, f3(0, -1, 0)},
            {c(1), {2, 0, 0}, f3(0, -2, 2)},
            {b * -4, {1, 1, 0}, f3(-1, 1, -1)},
            {c(-4), {1, 1, 0}, f3(-1, 1, -2)},
            {c(2), {1, 0, 1}, f3(-1, 0, 1)},
            {a * b * 4, {0, 2, 0}, f3(1, 0, -1)},
            {b * 4, {0, 2, 0}, f3(2, 0, -1)},
            {a * 4, {0, 2, 0}, f3(1, 0, -2)},
            {c(4), {0, 2, 0}, f3(2, 0, -2)},
            {a * -4, {0, 1, 1}, f3(1, -1, 1)},
            {c(-4), {0, 1, 1}, f3(2, -1, 1)},
            {a * 2, {0, 0, 2}, f3(0, 1, 0)},
            {c(1), {0, 0, 2}, f3(-2, 2, 0)},
            {a * b * 4, {0, 0, 0}, f3(1, -1, 0)},
            {a * b * 4, {0, 0, 0}, f3(0, 1, -1)},
            {a * 2, {0, 0, 0}, f3(0, 0, 1)},
            {b * 2, {0, 0, 0}, f3(-1, 0, 0)},
            {a * 4, {0, 0, 0}, f3(0, 1, -2)},
            {b * 4, {0, 0, 0}, f3(2, -1, 0)},
            {b * 2, {0, 0, 0}, f3(-2, 2, -1)},
            {a * 2, {0, 0, 0}, f3(1, -2, 2)},
            {c(2), {0, 0, 0}, f3(2, -2, 2)},
            {c(2), {0, 0, 0}, f3(-2, 2, -2)},
        });
        return {I8, J8};
    }
    return {};
}

/// The two-term edge systems (real normal form): two exponentials, a
/// polynomial first integral of degree 3, 4 or 6 in the momenta.
struct EdgeSystem {
    std::string id;
    Potential potential;           // note: coefficients are -1
    PhasePolynomial hamiltonian;   // (1/2)(p1^2+p2^2) + potential
    PhasePolynomial integral;
};

inline EdgeSystem edge_system(const std::string& id) {
    using namespace detail;
    if (id == "E1") {
        Potential V(2, 3);
        V.add_term(f2(1, 0, 0, 1), c(-1));
        V.add_term(f2(1, 0, 0, -1), c(-1));
        PhasePolynomial I = build(2, {
            {c(-1), {0, 3}, f2(0, 0, 0, 0)},
            {c(3), {2, 1}, f2(0, 0, 0, 0)},
            {c3(3), {1, 0}, f2(1, 0, 0, -1)},
            {c3(-3), {1, 0}, f2(1, 0, 0, 1)},
            {c(3), {0, 1}, f2(1, 0, 0, 1)},
            {c(3), {0, 1}, f2(1, 0, 0, -1)},
        });
        return {"E1", V, V.hamiltonian(), I};
    }
    if (id == "E2") {
        Potential V(2);
        V.add_term(f2(1, 0, 0, 0), c(-1));
        V.add_term(f2(-1, 0, 1, 0), c(-1));
        PhasePolynomial I = build(2, {
            {c(1), {2, 2}, f2(0, 0, 0, 0)},
            {c(-2), {0, 2}, f2(1, 0, 0, 0)},
            {c(2), {1, 1}, f2(-1, 0, 1, 0)},
            {c(2), {0, 0}, f2(0, 0, 1, 0)},
            {c(1), {0, 0}, f2(-2, 0, 2, 0)},
        });
        return {"E2", V, V.hamiltonian(), I};
    }
    if (id == "E3") {
        Potential V(2, 3);
        V.add_term(f2(0, 2, 0, 0), c(-1));   // k1 = (2sqrt3, 0)
        V.add_term(f2(0, -1, -1, 0), c(-1)); // k2 = (-sqrt3, -1)
        PhasePolynomial I = build(2, {
            {c(1), {6, 0}, f2(0, 0, 0, 0)},
            {c(-6), {4, 2}, f2(0, 0, 0, 0)},
            {c(9), {2, 4}, f2(0, 0, 0, 0)},
            {c(-6), {4, 0}, f2(0, 2, 0, 0)},
            {c(-6), {4, 0}, f2(0, -1, -1, 0)},
            {c3(6), {3, 1}, f2(0, -1, -1, 0)},
            {c(24), {2, 2}, f2(0, 2, 0, 0)},
            {c(18), {2, 2}, f2(0, -1, -1, 0)},
            {c3(-18), {1, 3}, f2(0, -1, -1, 0)},
            {c(-18), {0, 4}, f2(0, 2, 0, 0)},
            {c3(-18), {1, 1}, f2(0, -2, -2, 0)},
            {c3(-12), {1, 1}, f2(0, 1, -1, 0)},
            {c(9), {2, 0}, f2(0, -2, -2, 0)},
            {c(24), {2, 0}, f2(0, 1, -1, 0)},
            {c(12), {2, 0}, f2(0, 4, 0, 0)},
            {c(27), {0, 2}, f2(0, -2, -2, 0)},
            {c(-36), {0, 2}, f2(0, 1, -1, 0)},
            {c(-24), {0, 2}, f2(0, 4, 0, 0)},
            {c(-8), {0, 0}, f2(0, 6, 0, 0)},
            {c(-24), {0, 0}, f2(0, 3, -1, 0)},
        });
        return {"E3", V, V.hamiltonian(), I};
    }
    throw invalid_input("unknown edge system id: " + id);
}

/// Supports of the non-separable integrable families in dimension 2 and
/// the non-partially-separable ones in dimension 3 (screening fixtures).
inline std::vector<Potential> nonseparable_family_potentials() {
    return {potential("H1"), potential("H2"), potential("H3"), potential("H4"),
            potential("H5"), potential("H6"), potential("H7"), potential("H8")};
}

/// Representative separable and partially separable fixtures.
inline std::vector<Potential> separable_fixtures() {
    using namespace detail;
    std::vector<Potential> out;
    {
        Potential V(2);
        V.add_term(f2(1, 0, 0, 0), c(1));
        V.add_term(f2(-1, 0, 0, 0), c(1));
        V.add_term(f2(0, 0, 1, 0), c(1));
        out.push_back(V);
    }
    {
        // hexagonal block in (q1,q2) plus a separate q3 oscillator
        Potential V(3, 3);
        V.add_term(Frequency({q3(2, 0), q3(0, 0), q3(0, 0)}), c(1));
        V.add_term(Frequency({q3(-1, 0), q3(0, 1), q3(0, 0)}), c(1));
        V.add_term(Frequency({q3(-1, 0), q3(0, -1), q3(0, 0)}), c(1));
        V.add_term(Frequency({q3(0, 0), q3(0, 0), q3(1, 0)}), c(1));
        V.add_term(Frequency({q3(0, 0), q3(0, 0), q3(-1, 0)}), c(1));
        out.push_back(V);
    }
    return out;
}

}  // namespace torint::catalog
