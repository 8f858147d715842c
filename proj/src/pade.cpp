#include "padeq/pade.hpp"

#include <sstream>

#include "padeq/errors.hpp"

namespace padeq
{

HankelSystem hankel_system(std::span<const Rational> a, std::size_t t)
{
    if (t == 0) {
        throw ArgumentError("hankel_system: t must be >= 1");
    }
    if (a.size() != 2 * t) {
        throw ArgumentError("hankel_system: expected " + std::to_string(2 * t) + " coefficients, got " +
                            std::to_string(a.size()));
    }
    HankelSystem sys;
    sys.t = t;
    sys.entries.assign(t, std::vector<Rational>(t + 1));
    for (std::size_t r = 0; r < t; ++r) {
        for (std::size_t c = 0; c <= t; ++c) {
            // a_{2t-r-c}, stored at index 2t-r-c-1
            sys.entries[r][c] = a[2 * t - r - c - 1];
        }
    }
    return sys;
}

Rref rref(Matrix m)
{
    Rref out;
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows == 0 ? 0 : m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = row;
        while (pivot < nrows && m[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == nrows) {
            continue;
        }
        std::swap(m[row], m[pivot]);
        const Rational inv = m[row][col].inverse();
        for (std::size_t c = col; c < ncols; ++c) {
            m[row][c] *= inv;
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col].is_zero()) {
                continue;
            }
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < ncols; ++c) {
                m[r][c] -= factor * m[row][c];
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rows = std::move(m);
    return out;
}

std::vector<Rational> kernel_vector(const HankelSystem &sys)
{
    const std::size_t n = sys.cols();
    const Rref red = rref(sys.entries);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) {
        is_pivot[p] = true;
    }
    std::size_t free_col = n;
    for (std::size_t c = n; c-- > 0;) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    if (free_col == n) {
        // more columns than rows, so a free column always exists
        throw ConstructionError("kernel_vector: no free variable in a t x (t+1) system");
    }

    std::vector<Rational> q(n);
    q[free_col] = Rational(1);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        q[red.pivots[i]] = -red.rows[i][free_col];
    }
    return q;
}

NormalizedKernel normalize_and_j(std::span<const Rational> q)
{
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j].is_zero()) {
            continue;
        }
        NormalizedKernel out;
        out.j = j;
        out.q.reserve(q.size());
        const Rational inv = q[j].inverse();
        for (const auto &v : q) {
            out.q.push_back(v * inv);
        }
        return out;
    }
    throw ArgumentError("normalize_and_j: all-zero vector");
}

std::string describe(const PadeApproximant &pade)
{
    std::ostringstream os;
    os << "t = " << pade.t << ", j = " << pade.j << ", a0 = " << pade.a0 << "\n"
       << "F = " << pade.F.str() << "\n"
       << "Q = " << pade.Q.str() << "\n"
       << "P = " << pade.P.str() << "\n"
       << "S = " << pade.S.str() << "\n";
    return os.str();
}

PadeApproximant build_pade(std::span<const Rational> a, std::size_t t, const Rational &a0)
{
    const HankelSystem sys = hankel_system(a, t);
    const std::vector<Rational> q = kernel_vector(sys);
    NormalizedKernel nk = normalize_and_j(q);

    PadeApproximant pade;
    pade.t = t;
    pade.j = nk.j;
    pade.a0 = a0;
    {
        std::vector<Rational> f(2 * t + 1);
        std::copy(a.begin(), a.end(), f.begin() + 1);
        pade.F = PolyQ(std::move(f));
    }
    pade.Q = PolyQ(std::move(nk.q));

    const PolyQ QF = pade.Q * pade.F;
    const auto fail = [&](const std::string &why) {
        throw ConstructionError("build_pade: " + why + "\n" + describe(pade) + "Q*F = " + QF.str());
    };

    for (std::size_t k = t + 1; k <= 2 * t; ++k) {
        if (!QF.coeff(k).is_zero()) {
            fail("b_" + std::to_string(k) + " does not vanish");
        }
    }
    for (std::size_t k = 0; k <= pade.j; ++k) {
        if (!QF.coeff(k).is_zero()) {
            fail("b_" + std::to_string(k) + " below the valuation of P is nonzero");
        }
    }
    pade.P = QF.truncated(t);
    const PolyQ rem = pade.P - QF;
    try {
        pade.S = rem.shifted_down(2 * t + 1);
    } catch (const ArgumentError &) {
        fail("P - Q*F is not divisible by z^" + std::to_string(2 * t + 1));
    }
    if (pade.S.degree() > static_cast<long>(t) - 1) {
        fail("deg S exceeds t-1");
    }
    return pade;
}

Rational eval_R(const PadeApproximant &pade, const Rational &x)
{
    const Rational qx = eval_poly(pade.Q, x);
    if (qx.is_zero()) {
        throw PoleError("R has a pole at " + x.str(), x.str());
    }
    return pade.a0 + eval_poly(pade.P, x) / qx;
}

Rational eval_R_at_reciprocal(const PadeApproximant &pade, const Integer &M)
{
    const std::size_t t = pade.t;
    const std::size_t j = pade.j;
    Rational num;
    Rational den;
    // Horner in M over the index ranges b_{j+1..t} and q_{j..t}.
    for (std::size_t k = j + 1; k <= t; ++k) {
        num = num * Rational(M) + pade.P.coeff(k);
    }
    for (std::size_t k = j; k <= t; ++k) {
        den = den * Rational(M) + pade.Q.coeff(k);
    }
    if (den.is_zero()) {
        throw PoleError("R has a pole at 1/" + M.get_str(), Rational(1, M).str());
    }
    return pade.a0 + num / den;
}

TruncSeries series_of_R(const PadeApproximant &pade, std::size_t n)
{
    const PolyQ Qs = pade.Q.shifted_down(pade.j);
    const PolyQ Ps = pade.P.shifted_down(pade.j);
    TruncSeries r = series_div_trunc(TruncSeries(Ps, n), TruncSeries(Qs, n), n);
    std::vector<Rational> c = r.coeffs();
    c[0] += pade.a0;
    return TruncSeries(std::move(c), n);
}

} // namespace padeq
