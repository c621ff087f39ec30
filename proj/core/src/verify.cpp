#include "ffp/verify.hpp"

#include "ffp/finfree.hpp"
#include "ffp/identities.hpp"
#include "ffp/immanant.hpp"
#include "ffp/symfunc.hpp"
#include "ffp/symgroup.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ffp {

namespace {

// Counts assertions and keeps the first failure for the report.
class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)) {}

    bool expect(bool ok, const std::function<std::string()>& describe) {
        ++checked_;
        if (!ok) {
            ++failed_;
            if (first_failure_.empty()) first_failure_ = describe();
        }
        return ok;
    }

    void note(std::string text) { note_ = std::move(text); }

    CheckResult result() const {
        CheckResult r{name_, failed_ == 0, {}};
        std::ostringstream out;
        if (failed_ == 0)
            out << checked_ << " assertions";
        else
            out << failed_ << " of " << checked_ << " failed; first: " << first_failure_;
        if (!note_.empty()) out << "; " << note_;
        r.detail = out.str();
        return r;
    }

private:
    std::string name_;
    long checked_ = 0;
    long failed_ = 0;
    std::string first_failure_;
    std::string note_;
};

// Fixed-seed source of small random integer inputs.
class InputGenerator {
public:
    explicit InputGenerator(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    Spectrum spectrum(int d, long lo, long hi) {
        std::vector<long> v;
        for (int i = 0; i < d; ++i) v.push_back(integer(lo, hi));
        return Spectrum::from_ints(v);
    }

    RationalMatrix matrix(int n, long lo, long hi) {
        RationalMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = integer(lo, hi);
        return m;
    }

private:
    std::mt19937_64 engine_;
};

constexpr std::uint64_t kInputSeed = 20240917;

std::string str(const Spectrum& s) {
    std::string out = "(";
    for (int i = 0; i < s.dim(); ++i) out += (i ? "," : "") + to_string(s[i]);
    return out + ")";
}

std::string vs(const Rational& got, const Rational& want) { return to_string(got) + " != " + to_string(want); }

// Every vector in {lo..hi}^d.
std::vector<Spectrum> all_spectra(int d, long lo, long hi) {
    std::vector<Spectrum> out;
    std::vector<long> v(static_cast<std::size_t>(d), lo);
    while (true) {
        out.push_back(Spectrum::from_ints(v));
        int pos = 0;
        while (pos < d && ++v[static_cast<std::size_t>(pos)] > hi) v[static_cast<std::size_t>(pos++)] = lo;
        if (pos == d) break;
    }
    return out;
}

Partition two_row(int k, int r) { return Partition::from_unsorted({k - r, r}); }

// Compares every coefficient of a report with its exact value.
void expect_band(Tally& t, const McReport& report, const std::vector<Rational>& exact, const std::string& what,
                 double& worst_z) {
    for (std::size_t i = 0; i < exact.size(); ++i) {
        const double want = to_double(exact[i]);
        const double z = z_score(report.mean[i], report.std_error[i], want);
        worst_z = std::max(worst_z, z);
        t.expect(within_band(report.mean[i], report.std_error[i], want), [&] {
            std::ostringstream out;
            out << what << " " << report.labels[i] << ": mean " << report.mean[i] << ", exact " << want << ", se "
                << report.std_error[i];
            return out.str();
        });
    }
}

std::string worst_note(double worst_z) {
    std::ostringstream out;
    out << "max z " << worst_z;
    return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// weingarten

CheckResult check_wg_two_point(const VerifyOptions& opt) {
    Tally t("Wg_{2,d} two-point values, d=2..6");
    for (int d = 2; d <= 6; ++d) {
        const ClassFunction wg = opt.wg_source(2, d);
        const Rational id = Rational(1) / (d * d - 1);
        const Rational tr = Rational(-1) / (d * (d * d - 1));
        t.expect(wg(Partition{1, 1}) == id, [&] { return "d=" + std::to_string(d) + " identity " + vs(wg(Partition{1, 1}), id); });
        t.expect(wg(Partition{2}) == tr, [&] { return "d=" + std::to_string(d) + " transposition " + vs(wg(Partition{2}), tr); });
    }
    return t.result();
}

CheckResult check_wg_gram_oracle(const VerifyOptions& opt) {
    Tally t("Wg_{k,d} against inverse Gram matrix, k<=4, k<=d<=6");
    for (int k = 1; k <= kGramOracleCap; ++k)
        for (int d = k; d <= 6; ++d) {
            const ClassFunction wg = opt.wg_source(k, d);
            const ClassFunction gram = weingarten_gram_oracle(k, d);
            for (const auto& [rho, value] : gram.values())
                t.expect(wg(rho) == value, [&] {
                    return "k=" + std::to_string(k) + " d=" + std::to_string(d) + " " + rho.to_string() + " " +
                           vs(wg(rho), value);
                });
        }
    return t.result();
}

CheckResult check_wg_small_cases(const VerifyOptions& opt) {
    Tally t("Wg_{1,d} = 1/d and Wg_{2,1} = 1/4");
    for (int d = 1; d <= 6; ++d) {
        const Rational got = opt.wg_source(1, d)(Partition{1});
        t.expect(got == Rational(1, d), [&] { return "d=" + std::to_string(d) + " " + vs(got, Rational(1, d)); });
    }
    const ClassFunction wg21 = opt.wg_source(2, 1);
    for (const auto& [rho, value] : wg21.values())
        t.expect(value == Rational(1, 4), [&] { return "Wg_{2,1}" + rho.to_string() + " " + vs(value, Rational(1, 4)); });
    return t.result();
}

CheckResult check_moments_exact(const VerifyOptions& opt) {
    Tally t("exact Haar moments via Weingarten integration, d<=6");
    auto moment = [&](const IndexMap& i, const IndexMap& j, const IndexMap& ic, const IndexMap& jc, int d) {
        return integrate_moment(i, j, ic, jc, d, opt.wg_source);
    };
    for (int d = 1; d <= 6; ++d) {
        const std::string tag = "d=" + std::to_string(d) + " ";
        const Rational m2 = moment({1}, {1}, {1}, {1}, d);
        t.expect(m2 == Rational(1, d), [&] { return tag + "E|u11|^2 " + vs(m2, Rational(1, d)); });
        const Rational m4 = moment({1, 1}, {1, 1}, {1, 1}, {1, 1}, d);
        const Rational m4_want(2, d * (d + 1));
        t.expect(m4 == m4_want, [&] { return tag + "E|u11|^4 " + vs(m4, m4_want); });

        Rational row = 0;
        for (int j = 1; j <= d; ++j) row += moment({1}, {j}, {1}, {j}, d);
        t.expect(row == 1, [&] { return tag + "sum_j E|u1j|^2 " + vs(row, 1); });

        if (d >= 2 && d <= 5) {
            Rational diag = 0, off = 0;
            for (int j = 1; j <= d; ++j)
                for (int jj = 1; jj <= d; ++jj) {
                    diag += moment({1, 2}, {j, jj}, {1, 2}, {j, jj}, d);
                    off += moment({1, 2}, {j, jj}, {2, 1}, {j, jj}, d);
                }
            t.expect(diag == 1, [&] { return tag + "E[(UU*)11 (UU*)22] " + vs(diag, 1); });
            t.expect(off == 0, [&] { return tag + "E|(UU*)12|^2 " + vs(off, 0); });
        }
        const Rational mixed = integrate_moment({1}, {1}, {1, 1}, {1, 1}, d, opt.wg_source);
        t.expect(mixed == 0, [&] { return tag + "unbalanced moment " + vs(mixed, 0); });
    }
    return t.result();
}

CheckResult check_moments_mc(const VerifyOptions& opt) {
    Tally t("Monte Carlo E|u11|^2, E|u11|^4, d=2..6");
    double worst = 0.0;
    for (int d = 2; d <= 6; ++d) {
        const McReport r = mc_u11_moments(d, opt.mc);
        expect_band(t, r, {Rational(1, d), Rational(2, d * (d + 1))}, "d=" + std::to_string(d), worst);
    }
    t.note(worst_note(worst));
    return t.result();
}

CheckResult check_haar_unitarity(const VerifyOptions& opt) {
    Tally t("Haar sampler unitarity residual < 1e-10, d<=50");
    RandomStream stream(opt.mc.seed, 0xA5A5);
    double worst = 0.0;
    for (int d : {1, 2, 3, 5, 8, 13, 21, 34, 50})
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix u = haar_sample(d, stream);
            const double res = unitarity_residual(u);
            worst = std::max(worst, res);
            t.expect(res < 1e-10, [&] { return "d=" + std::to_string(d) + " residual " + std::to_string(res); });
            if (d == 1)
                t.expect(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-12, [] { return std::string("d=1 modulus"); });
        }
    std::ostringstream note;
    note << "max residual " << worst;
    t.note(note.str());
    return t.result();
}

CheckResult check_haar_conjugation(const VerifyOptions& opt) {
    Tally t("Monte Carlo E[U X U*] = (Tr X/d) I, d in {2,3,5}");
    double worst = 0.0;
    const std::vector<long> base{3, -1, 2, 0, 5};
    for (int d : {2, 3, 5}) {
        const Spectrum x = Spectrum::from_ints(std::vector<long>(base.begin(), base.begin() + d));
        Rational trace = 0;
        for (const auto& v : x.values()) trace += v;
        std::vector<Rational> exact;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                exact.push_back(i == j ? trace / d : Rational(0));
                exact.push_back(0);
            }
        const McReport r = mc_conjugation_mean(x, opt.mc);
        t.expect(r.max_unitarity_residual < 1e-10, [&] { return "d=" + std::to_string(d) + " unitarity residual"; });
        expect_band(t, r, exact, "d=" + std::to_string(d), worst);
    }
    t.note(worst_note(worst));
    return t.result();
}

// ---------------------------------------------------------------------------
// immanant

CheckResult check_imm_delta_minus(const VerifyOptions&) {
    Tally t("Imm(delta_-(X)) closed form vs direct, k<=7, 20 spectra");
    InputGenerator gen(kInputSeed);
    for (int k = 1; k <= 7; ++k)
        for (int rep = 0; rep < 20; ++rep) {
            const Spectrum x = gen.spectrum(k, -5, 5);
            const auto direct = immanants_direct_all(delta(x, DeltaSign::minus));
            for (const auto& [lambda, value] : direct) {
                const Rational closed = imm_delta_minus(lambda, x);
                t.expect(closed == value, [&] { return lambda.to_string() + " X=" + str(x) + " " + vs(closed, value); });
            }
            const Rational perm = direct.at(Partition{k});
            t.expect(perm == permanent_delta_minus(x), [&] { return "permanent X=" + str(x); });
        }
    return t.result();
}

CheckResult check_immanant_gj(const VerifyOptions&) {
    Tally t("Goulden-Jackson extraction vs direct immanants, n<=5, 10 matrices");
    InputGenerator gen(kInputSeed + 1);
    for (int n = 1; n <= kGouldenJacksonCap; ++n)
        for (int rep = 0; rep < 10; ++rep) {
            const RationalMatrix y = gen.matrix(n, -3, 3);
            for (const auto& [lambda, value] : immanants_direct_all(y)) {
                const Rational gj = immanant_gj(lambda, y);
                t.expect(gj == value, [&] { return "n=" + std::to_string(n) + " " + lambda.to_string() + " " + vs(gj, value); });
            }
        }
    return t.result();
}

CheckResult check_charpoly_z_delta(const VerifyOptions&) {
    Tally t("char poly of Z delta_-(X): formula vs principal minors, k<=6");
    InputGenerator gen(kInputSeed + 2);
    for (int k = 2; k <= 6; ++k)
        for (int rep = 0; rep < 10; ++rep) {
            const Spectrum x = gen.spectrum(k, -4, 4);
            const Spectrum z = gen.spectrum(k, -3, 3);
            const MonicPoly formula = charpoly_z_delta(x, z);
            const MonicPoly direct = charpoly_z_delta_direct(x, z);
            t.expect(formula == direct, [&] {
                return "X=" + str(x) + " z=" + str(z) + ": " + formula.to_string() + " vs " + direct.to_string();
            });
        }
    return t.result();
}

CheckResult check_immanant_column_sum(const VerifyOptions&) {
    Tally t("sum_lambda dim(lambda) Imm^lambda(Y) = n! prod y_ii, n<=5");
    InputGenerator gen(kInputSeed + 3);
    for (int n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 10; ++rep) {
            const RationalMatrix y = gen.matrix(n, -3, 3);
            Rational lhs = 0;
            for (const auto& [lambda, value] : immanants_direct_all(y)) lhs += Rational(dim_irrep(lambda)) * value;
            Rational rhs = Rational(factorial(n));
            for (int i = 0; i < n; ++i) rhs *= y(i, i);
            t.expect(lhs == rhs, [&] { return "n=" + std::to_string(n) + " " + vs(lhs, rhs); });
        }
    return t.result();
}

// ---------------------------------------------------------------------------
// identities

CheckResult check_basis_transitions(const VerifyOptions&) {
    Tally t("e<->m transitions: two-row/two-column formulas and round trips, k<=8");
    for (int k = 1; k <= 8; ++k) {
        for (int p = 0; 2 * p <= k; ++p) {
            const SymExpansion want = em_two_row(k, p);
            const SymExpansion got = e_to_m(two_row(k, p));
            t.expect(got == want, [&] { return "e_(k-p,p) k=" + std::to_string(k) + " p=" + std::to_string(p); });
        }
        for (int q = 0; 2 * q <= k; ++q) {
            const SymExpansion got = m_to_e(Partition::two_column(k, q));
            t.expect(got == me_two_column(k, q),
                     [&] { return "m_{2_k^q} k=" + std::to_string(k) + " q=" + std::to_string(q); });
        }
        if (k % 2 == 0)
            t.expect(m_to_e(Partition::two_column(k, k / 2)) == me_two_column_symmetric(k),
                     [&] { return "symmetric form k=" + std::to_string(k); });
    }
    for (int k = 1; k <= 7; ++k)
        for (const auto& lambda : partitions_of(k)) {
            SymExpansion back(Basis::monomial, k);
            const SymExpansion in_e = m_to_e(lambda);
            for (const auto& [nu, c] : in_e.terms()) {
                const SymExpansion in_m = e_to_m(nu);
                for (const auto& [mu, c2] : in_m.terms()) back.add(mu, c * c2);
            }
            SymExpansion id(Basis::monomial, k);
            id.add(lambda, 1);
            t.expect(back == id, [&] { return "round trip " + lambda.to_string(); });
        }
    SymExpansion example(Basis::monomial, 5);
    example.add(Partition{3, 2}, 1);
    example.add(Partition{3, 1, 1}, 2);
    example.add(Partition{2, 2, 1}, 5);
    // In three variables only monomials of length <= 3 survive.
    SymExpansion three_vars(Basis::monomial, 5);
    const SymExpansion full = e_to_m(Partition{2, 2, 1});
    for (const auto& [mu, c] : full.terms())
        if (mu.length() <= 3) three_vars.add(mu, c);
    t.expect(three_vars == example, [] { return std::string("e_(2,2,1) in three variables"); });
    return t.result();
}

CheckResult check_padding(const VerifyOptions&) {
    Tally t("orbit padding identity for M_I, k<=6, d<=8");
    InputGenerator gen(kInputSeed + 4);
    for (int k = 1; k <= 6; ++k)
        for (int q = 0; 2 * q <= k; ++q)
            for (int d = 1; d <= 8; ++d) {
                const Spectrum x = gen.spectrum(d, -3, 3);
                const DualValue v = padding_identity(k, q, x);
                t.expect(v.agree(), [&] {
                    return "k=" + std::to_string(k) + " q=" + std::to_string(q) + " x=" + str(x) + " " + vs(v.raw, v.closed);
                });
            }
    return t.result();
}

CheckResult check_split_chains(const VerifyOptions&) {
    Tally t("split-chain counts and orbit sizes, k<=6");
    for (int k = 0; k <= 6; ++k)
        for (int q = 0; 2 * q <= k; ++q) {
            std::vector<int> base(static_cast<std::size_t>(q), 2);
            base.insert(base.end(), static_cast<std::size_t>(k - 2 * q), 1);
            base.insert(base.end(), static_cast<std::size_t>(q), 0);
            const Integer orb = orbit_size(WeakComposition(base));
            const Integer want = binomial(k, q) * binomial(k - q, q);
            t.expect(orb == want, [&] { return "|Orb| k=" + std::to_string(k) + " q=" + std::to_string(q); });
            for (int l = 0; l <= k; ++l) {
                const Integer count = split_chain_count(k, l, q);
                const Integer formula = split_chain_count_formula(k, l, q);
                t.expect(count == formula, [&] {
                    return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " q=" + std::to_string(q) + ": " +
                           count.str() + " != " + formula.str();
                });
            }
        }
    return t.result();
}

CheckResult check_telescoping(const VerifyOptions&) {
    Tally t("telescoping binomial identity, k<=10");
    for (int k = 0; k <= 10; ++k)
        for (int p = 0; 2 * p <= k; ++p)
            for (int q = 0; q <= p; ++q) {
                const DualValue v = telescoping_identity(k, q, p);
                t.expect(v.agree(), [&] {
                    return "k=" + std::to_string(k) + " q=" + std::to_string(q) + " p=" + std::to_string(p) + " " +
                           vs(v.raw, v.closed);
                });
            }
    return t.result();
}

CheckResult check_gould(const VerifyOptions&) {
    Tally t("alternating reciprocal-binomial identity, n<=8, 1<=y<=12");
    for (int n = 0; n <= 8; ++n)
        for (int y = 1; y <= 12; ++y) {
            const DualValue v = gould_binomial_identity(n, y);
            t.expect(v.agree(), [&] { return "n=" + std::to_string(n) + " y=" + std::to_string(y) + " " + vs(v.raw, v.closed); });
        }
    return t.result();
}

CheckResult check_rothe_hagen(const VerifyOptions&) {
    Tally t("Rothe-Hagen identity, n<=8, n<=y<=n+12");
    for (int n = 1; n <= 8; ++n)
        for (int y = n; y <= n + 12; ++y) {
            const DualValue v = rothe_hagen_identity(n, y);
            t.expect(v.agree(), [&] { return "n=" + std::to_string(n) + " y=" + std::to_string(y) + " " + vs(v.raw, v.closed); });
        }
    return t.result();
}

CheckResult check_left_right_factors(const VerifyOptions&) {
    Tally t("left and right factor identities, k<=6, d<=8, 10 spectra");
    InputGenerator gen(kInputSeed + 5);
    for (int k = 0; k <= 6; ++k)
        for (int d = std::max(k, 1); d <= kIdentityDimCap; ++d)
            for (int rep = 0; rep < 10; ++rep) {
                const Spectrum a = gen.spectrum(d, -3, 3);
                const DualValue left = identity_leftdep(a, k);
                const std::string tag = "k=" + std::to_string(k) + " A=" + str(a) + " ";
                t.expect(left.agree(), [&] { return tag + "left " + vs(left.raw, left.closed); });
                if (k % 2 == 1) {
                    t.expect(left.raw == 0, [&] { return tag + "odd left raw " + to_string(left.raw); });
                    continue;
                }
                const DualValue right = identity_rightdep(a, k);
                t.expect(right.agree(), [&] { return tag + "right " + vs(right.raw, right.closed); });
            }
    return t.result();
}

CheckResult check_c_constants(const VerifyOptions&) {
    Tally t("C_{lambda,mu}: closed forms vs character brute force, k<=5");
    for (int k = 1; k <= 5; ++k) {
        const auto parts = partitions_of(k);
        for (const auto& lambda : parts)
            for (const auto& mu : parts) {
                const std::string tag = lambda.to_string() + "," + mu.to_string() + " ";
                const Rational c = c_constant(lambda, mu);
                t.expect((c != 0) == dominance_leq(mu, lambda), [&] { return tag + "zero pattern, C = " + to_string(c); });
                if (lambda.is_two_column() && mu.is_two_column()) {
                    const Rational two = c_constant_two_column(k, lambda.two_count(), mu.two_count());
                    t.expect(two == c, [&] { return tag + "two-column " + vs(two, c); });
                }
                for (const auto& rho : parts) {
                    const BruteForceConstant bf = c_constant_bruteforce(lambda, mu, Permutation::of_cycle_type(rho));
                    if (bf.ratio)
                        t.expect(*bf.ratio == c, [&] { return tag + "sigma " + rho.to_string() + " " + vs(*bf.ratio, c); });
                    else
                        t.expect(bf.raw_sum == 0,
                                 [&] { return tag + "sigma " + rho.to_string() + " raw " + to_string(bf.raw_sum); });
                }
            }
    }
    return t.result();
}

CheckResult check_kostka_families(const VerifyOptions&) {
    Tally t("Kostka, inverse Kostka, dimension and principal-specialization families");
    for (int k = 0; k <= 10; ++k) {
        const std::string tag = "k=" + std::to_string(k) + " ";
        for (int r = 0; 2 * r <= k; ++r) {
            const Partition lr = Partition::two_column(k, r);
            t.expect(dim_two_column(k, r) == dim_irrep(lr), [&] { return tag + "dim 2_k^" + std::to_string(r); });
            for (int q = 0; q <= r; ++q) {
                const Rational want = Rational(factorial(k - 2 * q) * (k - 2 * r + 1)) /
                                      Rational(factorial(r - q) * factorial(k - r - q + 1));
                const Rational got = Rational(kostka(lr, Partition::two_column(k, q)));
                t.expect(got == want, [&] { return tag + "K(2_k^r,2_k^q) " + vs(got, want); });
                const Integer inv = inverse_kostka(Partition::two_column(k, q), lr);
                const Integer inv_want = sign_power(q - r) * binomial(k - q - r, k - 2 * q);
                t.expect(inv == inv_want, [&] { return tag + "K^-1(2_k^q,2_k^s) " + inv.str(); });
            }
            for (int s = 0; 2 * s <= k; ++s) {
                const Integer inv = inverse_kostka(two_row(k, r), two_row(k, s));
                const int want = s == r ? 1 : (s == r + 1 ? -1 : 0);
                t.expect(inv == want, [&] { return tag + "two-row inverse Kostka " + inv.str(); });
            }
            if (k <= 8)
                for (int d = 1; d <= 8; ++d) {
                    const Rational closed = schur_principal_two_column(k, r, d);
                    const Rational hook = schur_principal(lr, d);
                    t.expect(closed == hook, [&] { return tag + "s_{2_k^p}(1^d) d=" + std::to_string(d) + " " + vs(closed, hook); });
                }
        }
        if (k <= 6)
            for (const auto& lambda : partitions_of(k))
                for (const auto& mu : partitions_of(k))
                    t.expect(young_rule_multiplicity(lambda, mu) == kostka(lambda, mu),
                             [&] { return "Young's rule " + lambda.to_string() + "," + mu.to_string(); });
    }
    return t.result();
}

CheckResult check_kernel_sums(const VerifyOptions&) {
    Tally t("kernel sums over set partitions, k<=5, d<=6");
    InputGenerator gen(kInputSeed + 6);
    for (int d = 1; d <= 6; ++d) {
        const Spectrum b = gen.spectrum(d, -3, 3);
        for (int k = 1; k <= 5; ++k)
            for (const auto& pi : set_partitions(k)) {
                const Rational got = kernel_sum(pi, b);
                const Rational want = kernel_sum_closed(pi.type(), b);
                t.expect(got == want, [&] { return pi.to_string() + " b=" + str(b) + " " + vs(got, want); });
            }
    }
    return t.result();
}

// ---------------------------------------------------------------------------
// commutator

CheckResult check_triple_route(const VerifyOptions& opt) {
    Tally t("commutator: brute force = coefficient formula = convolution, d=2,3 all, d=4 sampled");
    long pairs = 0;
    auto run_pair = [&](const Spectrum& a, const Spectrum& b) {
        ++pairs;
        const MonicPoly poly = commutator_poly(MonicPoly::from_spectrum(a), MonicPoly::from_spectrum(b));
        for (int k = 0; k <= a.dim(); ++k) {
            const Rational bf = brute_force_expected_ek(a, b, k, opt.wg_source);
            const Rational coef = commutator_coefficient(k, a, b);
            const std::string tag = "A=" + str(a) + " B=" + str(b) + " k=" + std::to_string(k) + " ";
            t.expect(bf == coef && coef == poly.a(k), [&] {
                return tag + "brute " + to_string(bf) + ", formula " + to_string(coef) + ", convolution " +
                       to_string(poly.a(k));
            });
            if (k % 2 == 1) t.expect(bf == 0 && coef == 0 && poly.a(k) == 0, [&] { return tag + "odd coefficient"; });
        }
    };
    for (int d = 2; d <= 3; ++d) {
        const auto spectra = all_spectra(d, -2, 2);
        for (const auto& a : spectra)
            for (const auto& b : spectra) run_pair(a, b);
    }
    InputGenerator gen(kInputSeed + 7);
    for (int rep = 0; rep < 50; ++rep) {
        const Spectrum a = gen.spectrum(4, -2, 2);
        const Spectrum b = gen.spectrum(4, -2, 2);
        run_pair(a, b);
    }
    t.note(std::to_string(pairs) + " spectrum pairs");
    return t.result();
}

CheckResult check_flagship(const VerifyOptions& opt) {
    Tally t("flagship d=2, A=B=(1,-1): x^2 + 8/3 on every route");
    const Spectrum a{1, -1};
    const MonicPoly want({Rational(1), Rational(0), Rational(8, 3)});
    const MonicPoly p = MonicPoly::from_spectrum(a);
    const MonicPoly conv = commutator_poly(p, p);
    t.expect(conv == want, [&] { return "convolution gives " + conv.to_string(); });
    for (int k = 0; k <= 2; ++k) {
        const Rational coef = commutator_coefficient(k, a, a);
        const Rational bf = brute_force_expected_ek(a, a, k, opt.wg_source);
        t.expect(coef == want.a(k), [&] { return "formula k=" + std::to_string(k) + " " + vs(coef, want.a(k)); });
        t.expect(bf == want.a(k), [&] { return "brute force k=" + std::to_string(k) + " " + vs(bf, want.a(k)); });
    }
    if (opt.run_monte_carlo) {
        McConfig cfg = opt.mc;
        cfg.samples *= 2;
        double worst = 0.0;
        expect_band(t, mc_commutator_charpoly(a, a, cfg), want.a(), "Monte Carlo", worst);
        t.note(std::to_string(cfg.samples) + " samples, " + worst_note(worst));
    }
    return t.result();
}

CheckResult check_commutator_mc(const VerifyOptions& opt) {
    Tally t("Monte Carlo commutator characteristic polynomial, d=2,3");
    double worst = 0.0;
    const std::vector<std::pair<Spectrum, Spectrum>> cases{
        {Spectrum{1, -1}, Spectrum{2, 0}},
        {Spectrum{1, 0, -1}, Spectrum{2, -1, 1}},
        {Spectrum{-2, 1, 2}, Spectrum{0, 1, -1}},
        {Spectrum{5, 5, 5}, Spectrum{1, 2, 3}},
    };
    for (const auto& [a, b] : cases) {
        const MonicPoly exact = commutator_poly(MonicPoly::from_spectrum(a), MonicPoly::from_spectrum(b));
        expect_band(t, mc_commutator_charpoly(a, b, opt.mc), exact.a(), "A=" + str(a) + " B=" + str(b), worst);
    }
    t.note(worst_note(worst));
    return t.result();
}

CheckResult check_convolution_mc(const VerifyOptions& opt) {
    Tally t("Monte Carlo E c_x(A+UBU*), E c_x(AUBU*) against boxplus, boxtimes, d=2,3");
    double worst = 0.0;
    const std::vector<std::pair<Spectrum, Spectrum>> cases{
        {Spectrum{1, -1}, Spectrum{1, -1}},
        {Spectrum{2, 0}, Spectrum{1, 3}},
        {Spectrum{1, 2, 3}, Spectrum{-1, 0, 2}},
    };
    for (const auto& [a, b] : cases) {
        const MonicPoly p = MonicPoly::from_spectrum(a);
        const MonicPoly q = MonicPoly::from_spectrum(b);
        const std::string tag = "A=" + str(a) + " B=" + str(b);
        expect_band(t, mc_sum_charpoly(a, b, opt.mc), boxplus(p, q).a(), tag + " sum", worst);
        expect_band(t, mc_product_charpoly(a, b, opt.mc), boxtimes(p, q).a(), tag + " product", worst);
    }
    t.note(worst_note(worst));
    return t.result();
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() { return {"weingarten", "immanant", "identities", "commutator"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    using Check = CheckResult (*)(const VerifyOptions&);
    struct Entry {
        Check check;
        bool monte_carlo;
    };
    std::vector<Entry> entries;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "weingarten") {
        known = true;
        entries.insert(entries.end(), {{check_wg_two_point, false},
                                       {check_wg_gram_oracle, false},
                                       {check_wg_small_cases, false},
                                       {check_moments_exact, false},
                                       {check_haar_unitarity, false},
                                       {check_moments_mc, true},
                                       {check_haar_conjugation, true}});
    }
    if (all || suite == "immanant") {
        known = true;
        entries.insert(entries.end(), {{check_imm_delta_minus, false},
                                       {check_immanant_gj, false},
                                       {check_charpoly_z_delta, false},
                                       {check_immanant_column_sum, false}});
    }
    if (all || suite == "identities") {
        known = true;
        entries.insert(entries.end(), {{check_basis_transitions, false},
                                       {check_padding, false},
                                       {check_split_chains, false},
                                       {check_telescoping, false},
                                       {check_gould, false},
                                       {check_rothe_hagen, false},
                                       {check_left_right_factors, false},
                                       {check_c_constants, false},
                                       {check_kostka_families, false},
                                       {check_kernel_sums, false}});
    }
    if (all || suite == "commutator") {
        known = true;
        entries.insert(entries.end(), {{check_triple_route, false},
                                       {check_flagship, false},
                                       {check_commutator_mc, true},
                                       {check_convolution_mc, true}});
    }
    if (!known) throw std::invalid_argument("unknown suite \"" + suite + "\"");

    std::vector<CheckResult> results;
    for (const auto& e : entries) {
        if (e.monte_carlo && !opt.run_monte_carlo) continue;
        try {
            results.push_back(e.check(opt));
        } catch (const std::exception& ex) {
            results.push_back({"(check threw)", false, ex.what()});
        }
    }
    return results;
}

}  // namespace ffp
