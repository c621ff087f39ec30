#include "ffp/finfree.hpp"

#include "ffp/symfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace ffp {

MonicPoly::MonicPoly(std::vector<Rational> a) : a_(std::move(a)) {
    if (a_.empty() || a_.front() != 1) throw std::invalid_argument("monic polynomial needs a_0 = 1");
}

MonicPoly MonicPoly::monomial(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> a(static_cast<std::size_t>(d) + 1, Rational(0));
    a[0] = 1;
    return MonicPoly(std::move(a));
}

MonicPoly MonicPoly::from_spectrum(const Spectrum& spectrum) { return MonicPoly(elementary_all(spectrum)); }

Rational MonicPoly::signed_coefficient(int k) const { return k % 2 == 0 ? a(k) : Rational(-a(k)); }

std::string MonicPoly::to_string() const {
    std::ostringstream os;
    const int d = degree();
    bool first = true;
    for (int k = 0; k <= d; ++k) {
        Rational c = signed_coefficient(k);
        if (c == 0) continue;
        const int power = d - k;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << '-';
            c = -c;
        }
        first = false;
        const bool integral = denominator(c) == 1;
        if (power == 0) {
            os << ffp::to_string(c);
        } else {
            if (c != 1) os << (integral ? ffp::to_string(c) : "(" + ffp::to_string(c) + ")");
            os << 'x';
            if (power > 1) os << '^' << power;
        }
    }
    if (first) os << '0';
    return os.str();
}

namespace {

void require_same_degree(const MonicPoly& p, const MonicPoly& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("finite free convolution of polynomials with degrees " +
                                    std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
}

// sum_{i+j=k} sign(j) (d-i)!(d-j)!/(d!(d-k)!) a_i b_j
MonicPoly additive_convolution(const MonicPoly& p, const MonicPoly& q, bool alternate) {
    require_same_degree(p, q);
    const int d = p.degree();
    std::vector<Integer> fact(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) fact[static_cast<std::size_t>(i)] = factorial(i);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        Rational sum = 0;
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            Rational term = Rational(fact[static_cast<std::size_t>(d - i)] * fact[static_cast<std::size_t>(d - j)]) *
                            p.a(i) * q.a(j);
            if (alternate && j % 2 == 1) term = -term;
            sum += term;
        }
        c[static_cast<std::size_t>(k)] = sum / Rational(fact[static_cast<std::size_t>(d)] * fact[static_cast<std::size_t>(d - k)]);
    }
    return MonicPoly(std::move(c));
}

}  // namespace

MonicPoly boxplus(const MonicPoly& p, const MonicPoly& q) { return additive_convolution(p, q, false); }

MonicPoly boxminus(const MonicPoly& p, const MonicPoly& q) { return additive_convolution(p, q, true); }

MonicPoly boxtimes(const MonicPoly& p, const MonicPoly& q) {
    require_same_degree(p, q);
    const int d = p.degree();
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) c[static_cast<std::size_t>(k)] = p.a(k) * q.a(k) / Rational(binomial(d, k));
    return MonicPoly(std::move(c));
}

MonicPoly reflect(const MonicPoly& p) {
    std::vector<Rational> c = p.a();
    for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
    return MonicPoly(std::move(c));
}

MonicPoly z_poly(int d) {
    if (d < 1) throw std::invalid_argument("z_poly requires d >= 1");
    std::vector<Rational> a(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int k = 0; 2 * k <= d; ++k) {
        a[static_cast<std::size_t>(2 * k)] = Rational(binomial(d, 2 * k) * falling_factorial(d, k) * factorial(k),
                                                      factorial(2 * k)) *
                                             Rational(d + 1 - k, d + 1);
    }
    return MonicPoly(std::move(a));
}

MonicPoly commutator_poly(const MonicPoly& p, const MonicPoly& q) {
    require_same_degree(p, q);
    return boxtimes(boxtimes(boxminus(p, p), boxminus(q, q)), z_poly(p.degree()));
}

Rational commutator_coefficient(int k, const Spectrum& A, const Spectrum& B) {
    if (A.dim() != B.dim()) throw std::invalid_argument("commutator_coefficient: spectra of different sizes");
    const int d = A.dim();
    if (k < 0 || k > d) throw std::invalid_argument("commutator_coefficient requires 0 <= k <= d");
    if (k % 2 == 1) return 0;
    const auto eA = elementary_all(A);
    const auto eB = elementary_all(B);
    auto signed_sum = [&](const std::vector<Rational>& e) {
        Rational sum = 0;
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            Rational term = Rational(factorial(d - i) * factorial(d - j), factorial(d) * factorial(d - k)) *
                            e[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j)];
            sum += (i % 2 == 0) ? term : Rational(-term);
        }
        return sum;
    };
    const int h = k / 2;
    const Rational tail = Rational(factorial(d - k) * factorial(h), factorial(d - h)) * Rational(d + 1 - h, d + 1);
    return signed_sum(eA) * signed_sum(eB) * tail;
}

}  // namespace ffp
