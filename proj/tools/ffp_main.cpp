// ffp: command-line front end for the finite free probability library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "ffp/finfree.hpp"
#include "ffp/immanant.hpp"
#include "ffp/oracle.hpp"
#include "ffp/serialize.hpp"
#include "ffp/symgroup.hpp"
#include "ffp/verify.hpp"
#include "ffp/weingarten.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <map>
#include <optional>

namespace {

using namespace ffp;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Config {
    std::string format = "pretty";
    std::uint64_t seed = McConfig{}.seed;
    long chunk = McConfig{}.chunk_size;
    unsigned threads = 0;
    int cap_k = kDefaultPartitionCap;
    int cap_n = kImmanantCap;
    int cap_d = kBruteForceDimCap;

    bool json() const { return format == "json"; }

    McConfig mc(long samples) const {
        McConfig c;
        c.seed = seed;
        c.samples = samples;
        c.chunk_size = chunk;
        c.threads = threads;
        return c;
    }

    void validate() const {
        if (cap_k < 0 || cap_k > kCharacterCap) throw UsageError("--cap-k must lie in [0, " + std::to_string(kCharacterCap) + "]");
        if (cap_n < 1 || cap_n > kImmanantCap) throw UsageError("--cap-n must lie in [1, " + std::to_string(kImmanantCap) + "]");
        if (cap_d < 1 || cap_d > kBruteForceDimCap)
            throw UsageError("--cap-d must lie in [1, " + std::to_string(kBruteForceDimCap) + "]");
        if (chunk < 1) throw UsageError("--chunk must be positive");
    }
};

void emit(const Config& cfg, const Json& j, const std::function<void()>& pretty) {
    if (cfg.json())
        std::cout << j.dump(2) << '\n';
    else
        pretty();
}

Json poly_output(const MonicPoly& p) {
    Json j = poly_to_json(p);
    j["poly"] = p.to_string();
    return j;
}

void print_poly(const MonicPoly& p) {
    std::cout << p.to_string() << '\n' << "a = [";
    for (int k = 0; k <= p.degree(); ++k) std::cout << (k ? ", " : "") << to_string(p.a(k));
    std::cout << "]\n";
}

void print_matrix(const RationalMatrix& m) {
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) std::cout << (j ? "  " : "") << std::setw(6) << to_string(m(i, j));
        std::cout << '\n';
    }
}

// --- conv -----------------------------------------------------------------

int cmd_conv(const Config& cfg, const std::string& op, const std::string& p_file, const std::string& q_file) {
    const MonicPoly p = poly_from_json(read_json_file(p_file));
    const MonicPoly q = poly_from_json(read_json_file(q_file));
    if (p.degree() != q.degree()) throw UsageError("polynomials have different degrees");
    const MonicPoly r = op == "add" ? boxplus(p, q) : op == "mul" ? boxtimes(p, q) : boxminus(p, q);
    emit(cfg, poly_output(r), [&] { print_poly(r); });
    return kExitOk;
}

// --- zpoly ----------------------------------------------------------------

int cmd_zpoly(const Config& cfg, int d) {
    if (d < 1) throw UsageError("--d must be at least 1");
    const MonicPoly z = z_poly(d);
    emit(cfg, poly_output(z), [&] { print_poly(z); });
    return kExitOk;
}

// --- commutator -----------------------------------------------------------

int cmd_commutator(const Config& cfg, const std::string& a_file, const std::string& b_file, long mc_samples,
                   bool brute) {
    const Spectrum a = spectrum_from_json(read_json_file(a_file));
    const Spectrum b = spectrum_from_json(read_json_file(b_file));
    if (a.dim() != b.dim()) throw UsageError("spectra have different lengths");
    const int d = a.dim();
    const MonicPoly exact = commutator_poly(MonicPoly::from_spectrum(a), MonicPoly::from_spectrum(b));
    Json out = poly_output(exact);

    std::vector<Rational> bf;
    if (brute) {
        if (d > cfg.cap_d) throw CapExceeded("brute force needs d <= --cap-d (" + std::to_string(cfg.cap_d) + ")");
        Json arr = Json::array();
        for (int k = 0; k <= d; ++k) {
            bf.push_back(brute_force_expected_ek(a, b, k, default_weingarten_source(), cfg.cap_d));
            arr.push_back(rational_to_json(bf.back()));
        }
        out["brute_force"] = arr;
    }

    std::optional<McReport> report;
    std::vector<double> z;
    bool within = true;
    if (mc_samples > 0) {
        report = mc_commutator_charpoly(a, b, cfg.mc(mc_samples));
        Json zs = Json::array();
        for (int k = 0; k <= d; ++k) {
            const double want = to_double(exact.a(k));
            z.push_back(z_score(report->mean[static_cast<std::size_t>(k)], report->std_error[static_cast<std::size_t>(k)], want));
            within = within && within_band(report->mean[static_cast<std::size_t>(k)],
                                           report->std_error[static_cast<std::size_t>(k)], want);
            zs.push_back(format_double(z.back()));
        }
        out["monte_carlo"] = mc_report_to_json(*report);
        out["z_scores"] = zs;
        out["within_4se"] = within;
    }

    emit(cfg, out, [&] {
        std::cout << "E c_x = ";
        print_poly(exact);
        if (brute) {
            const bool same = std::equal(bf.begin(), bf.end(), exact.a().begin());
            std::cout << "brute force: " << (same ? "agrees" : "DISAGREES") << '\n';
        }
        if (report) {
            std::cout << "Monte Carlo: n=" << report->samples << " seed=" << report->seed << " chunk=" << report->chunk_size
                      << '\n';
            for (int k = 0; k <= d; ++k) {
                const auto i = static_cast<std::size_t>(k);
                std::cout << "  e" << k << "  exact " << std::setw(10) << to_string(exact.a(k)) << "  mean "
                          << std::setw(12) << report->mean[i] << "  se " << std::setw(10) << report->std_error[i]
                          << "  z " << z[i] << '\n';
            }
            std::cout << (within ? "all coefficients within 4 SE\n" : "some coefficient outside 4 SE\n");
        }
    });
    if (brute && !std::equal(bf.begin(), bf.end(), exact.a().begin())) return kExitFailed;
    return within ? kExitOk : kExitFailed;
}

// --- weingarten -----------------------------------------------------------

int cmd_weingarten(const Config& cfg, int k, int d) {
    if (k < 1 || d < 1) throw UsageError("--k and --d must be at least 1");
    if (k > cfg.cap_k) throw CapExceeded("k exceeds --cap-k");
    const ClassFunction& wg = weingarten(k, d);
    emit(cfg, weingarten_to_json(wg, d), [&] {
        std::cout << "Wg_{" << k << "," << d << "}\n";
        for (const auto& [rho, v] : wg.values()) std::cout << "  " << std::setw(14) << rho.to_string() << "  " << to_string(v) << '\n';
    });
    return kExitOk;
}

// --- immanant -------------------------------------------------------------

int cmd_immanant(const Config& cfg, const std::string& lambda_text, const std::string& matrix_file,
                 const std::string& delta_minus_file, const std::string& delta_plus_file, const std::string& method) {
    const int sources = !matrix_file.empty() + !delta_minus_file.empty() + !delta_plus_file.empty();
    if (sources != 1) throw UsageError("give exactly one of --matrix, --delta-minus, --delta-plus");

    std::optional<Spectrum> x;
    RationalMatrix y;
    if (!matrix_file.empty()) {
        y = matrix_from_json(read_json_file(matrix_file));
    } else {
        x = spectrum_from_json(read_json_file(delta_minus_file.empty() ? delta_plus_file : delta_minus_file));
        y = delta(*x, delta_minus_file.empty() ? DeltaSign::plus : DeltaSign::minus);
    }
    const int n = y.size();
    if (n > cfg.cap_n) throw CapExceeded("matrix size exceeds --cap-n");
    if (method == "closed" && delta_minus_file.empty())
        throw UsageError("--method closed applies only to --delta-minus");

    std::vector<Partition> lambdas;
    if (lambda_text.empty())
        lambdas = partitions_of(n, cfg.cap_k);
    else
        lambdas.push_back(parse_partition(lambda_text));
    for (const auto& l : lambdas)
        if (l.size() != n) throw UsageError("partition " + l.to_string() + " does not match the matrix size");

    std::map<Partition, Rational> values;
    if (method == "direct") {
        const auto all = immanants_direct_all(y, cfg.cap_n);
        for (const auto& l : lambdas) values[l] = all.at(l);
    } else {
        for (const auto& l : lambdas) values[l] = method == "gj" ? immanant_gj(l, y) : imm_delta_minus(l, *x);
    }

    Json terms = Json::array();
    for (const auto& [l, v] : values) terms.push_back({{"partition", partition_to_json(l)}, {"value", rational_to_json(v)}});
    const Json out{{"matrix", matrix_to_json(y)}, {"method", method}, {"immanants", terms}};
    emit(cfg, out, [&] {
        print_matrix(y);
        for (const auto& [l, v] : values) std::cout << "Imm^" << l.to_string() << " = " << to_string(v) << '\n';
    });
    return kExitOk;
}

// --- character ------------------------------------------------------------

int cmd_character(const Config& cfg, int k, const std::string& lambda_text, const std::string& rho_text) {
    if (!lambda_text.empty() || !rho_text.empty()) {
        if (lambda_text.empty() || rho_text.empty()) throw UsageError("--lambda and --rho go together");
        const Partition lambda = parse_partition(lambda_text);
        const Partition rho = parse_partition(rho_text);
        if (lambda.size() != rho.size()) throw UsageError("lambda and rho have different sizes");
        if (lambda.size() > cfg.cap_k) throw CapExceeded("size exceeds --cap-k");
        const Integer value = character(lambda, rho);
        const Json out{{"lambda", partition_to_json(lambda)}, {"rho", partition_to_json(rho)},
                       {"value", value.convert_to<long long>()}};
        emit(cfg, out, [&] { std::cout << "chi^" << lambda.to_string() << rho.to_string() << " = " << value << '\n'; });
        return kExitOk;
    }
    if (k < 0) throw UsageError("give --k, or --lambda with --rho");
    if (k > cfg.cap_k) throw CapExceeded("k exceeds --cap-k");
    const CharacterTable table = character_table(k);
    emit(cfg, character_table_to_json(table), [&] {
        std::cout << std::setw(16) << "";
        for (const auto& rho : table.classes) std::cout << std::setw(14) << rho.to_string();
        std::cout << '\n';
        for (std::size_t a = 0; a < table.irreps.size(); ++a) {
            std::cout << std::setw(16) << table.irreps[a].to_string();
            for (const auto& v : table.values[a]) std::cout << std::setw(14) << v;
            std::cout << '\n';
        }
    });
    return kExitOk;
}

// --- kostka ---------------------------------------------------------------

int cmd_kostka(const Config& cfg, int k, const std::string& lambda_text, const std::string& mu_text, bool inverse) {
    auto entry = [&](const Partition& l, const Partition& m) { return inverse ? inverse_kostka(l, m) : kostka(l, m); };
    const char* name = inverse ? "K^-1" : "K";
    if (!lambda_text.empty() || !mu_text.empty()) {
        if (lambda_text.empty() || mu_text.empty()) throw UsageError("--lambda and --mu go together");
        const Partition lambda = parse_partition(lambda_text);
        const Partition mu = parse_partition(mu_text);
        if (lambda.size() != mu.size()) throw UsageError("lambda and mu have different sizes");
        if (lambda.size() > cfg.cap_k) throw CapExceeded("size exceeds --cap-k");
        const Integer value = entry(lambda, mu);
        const Json out{{"lambda", partition_to_json(lambda)}, {"mu", partition_to_json(mu)}, {"inverse", inverse},
                       {"value", value.convert_to<long long>()}};
        emit(cfg, out, [&] { std::cout << name << lambda.to_string() << mu.to_string() << " = " << value << '\n'; });
        return kExitOk;
    }
    if (k < 0) throw UsageError("give --k, or --lambda with --mu");
    if (k > cfg.cap_k) throw CapExceeded("k exceeds --cap-k");
    const auto parts = partitions_of(k, cfg.cap_k);
    Json rows = Json::array();
    for (const auto& l : parts) {
        Json row = Json::array();
        for (const auto& m : parts) row.push_back(entry(l, m).convert_to<long long>());
        rows.push_back(row);
    }
    Json labels = Json::array();
    for (const auto& p : parts) labels.push_back(partition_to_json(p));
    const Json out{{"k", k}, {"inverse", inverse}, {"partitions", labels}, {"matrix", rows}};
    emit(cfg, out, [&] {
        std::cout << name << " for k=" << k << ", rows lambda, columns mu\n";
        for (std::size_t a = 0; a < parts.size(); ++a) {
            std::cout << std::setw(16) << parts[a].to_string();
            for (const auto& v : rows[a]) std::cout << std::setw(5) << v.get<long long>();
            std::cout << '\n';
        }
    });
    return kExitOk;
}

// --- verify ---------------------------------------------------------------

// Weingarten tables read from a file take precedence; everything else falls
// back to the computed tables.
WeingartenSource table_source(const std::string& path) {
    const Json j = read_json_file(path);
    auto tables = std::make_shared<std::map<std::pair<int, int>, ClassFunction>>();
    auto add = [&](const Json& entry) {
        if (!entry.is_object() || !entry.contains("d") || !entry["d"].is_number_integer())
            throw std::invalid_argument("Weingarten table entries need an integer \"d\"");
        const ClassFunction wg = class_function_from_json(entry);
        (*tables)[{wg.k(), entry["d"].get<int>()}] = wg;
    };
    if (j.is_array())
        for (const auto& entry : j) add(entry);
    else
        add(j);
    return [tables](int k, int d) {
        const auto it = tables->find({k, d});
        return it != tables->end() ? it->second : weingarten(k, d);
    };
}

int cmd_verify(const Config& cfg, const std::string& suite, long mc_samples, bool no_mc, const std::string& wg_table) {
    VerifyOptions opt;
    opt.mc = cfg.mc(mc_samples);
    opt.run_monte_carlo = !no_mc && mc_samples > 0;
    if (!wg_table.empty()) opt.wg_source = table_source(wg_table);
    const auto results = run_suite(suite, opt);

    bool ok = true;
    Json checks = Json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    const Json out{{"suite", suite}, {"passed", ok}, {"checks", checks}};
    emit(cfg, out, [&] {
        for (const auto& r : results)
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "\n      " << r.detail << '\n';
        std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
    });
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite free convolutions, Weingarten calculus and the expected characteristic polynomial of "
                 "commutators of randomly rotated matrices."};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--seed", cfg.seed, "Monte Carlo seed");
    app.add_option("--chunk", cfg.chunk, "Monte Carlo chunk size");
    app.add_option("--threads", cfg.threads, "Monte Carlo worker threads (0: one per core)");
    app.add_option("--cap-k", cfg.cap_k, "Largest partition size for enumerations");
    app.add_option("--cap-n", cfg.cap_n, "Largest matrix size for immanants");
    app.add_option("--cap-d", cfg.cap_d, "Largest dimension for the exact brute-force oracle");

    std::function<int()> run;

    auto* conv = app.add_subcommand("conv", "Finite free convolution of two polynomial files");
    std::string conv_op, p_file, q_file;
    conv->add_option("op", conv_op, "add (boxplus), mul (boxtimes) or sub (boxminus)")
        ->required()
        ->check(CLI::IsMember({"add", "mul", "sub"}));
    conv->add_option("p", p_file, "Polynomial JSON file")->required();
    conv->add_option("q", q_file, "Polynomial JSON file")->required();
    conv->callback([&] { run = [&] { return cmd_conv(cfg, conv_op, p_file, q_file); }; });

    auto* zpoly = app.add_subcommand("zpoly", "The polynomial z_d");
    int z_d = 0;
    zpoly->add_option("--d", z_d, "Degree")->required();
    zpoly->callback([&] { run = [&] { return cmd_zpoly(cfg, z_d); }; });

    auto* comm = app.add_subcommand("commutator", "Expected characteristic polynomial of AUBU* - UBU*A");
    std::string a_file, b_file;
    long comm_mc = 0;
    bool comm_brute = false;
    comm->add_option("A", a_file, "Spectrum JSON file for A")->required();
    comm->add_option("B", b_file, "Spectrum JSON file for B")->required();
    comm->add_option("--mc", comm_mc, "Also estimate by Monte Carlo with this many samples");
    comm->add_flag("--brute", comm_brute, "Also evaluate the exact Weingarten brute force (d <= --cap-d)");
    comm->callback([&] { run = [&] { return cmd_commutator(cfg, a_file, b_file, comm_mc, comm_brute); }; });

    auto* wg = app.add_subcommand("weingarten", "Weingarten class function Wg_{k,d}");
    int wg_k = 0, wg_d = 0;
    wg->add_option("--k", wg_k, "Number of matrix entries")->required();
    wg->add_option("--d", wg_d, "Matrix dimension")->required();
    wg->callback([&] { run = [&] { return cmd_weingarten(cfg, wg_k, wg_d); }; });

    auto* imm = app.add_subcommand("immanant", "Immanants of a matrix or of delta_(+/-)(X)");
    std::string imm_lambda, imm_matrix, imm_minus, imm_plus, imm_method = "direct";
    imm->add_option("--lambda", imm_lambda, "Partition such as 2,1 (default: all partitions of n)");
    imm->add_option("--matrix", imm_matrix, "Matrix JSON file");
    imm->add_option("--delta-minus", imm_minus, "Spectrum JSON file; uses (x_i - x_j)");
    imm->add_option("--delta-plus", imm_plus, "Spectrum JSON file; uses (x_i + x_j)");
    imm->add_option("--method", imm_method, "direct, gj (coefficient extraction) or closed (delta-minus only)")
        ->check(CLI::IsMember({"direct", "gj", "closed"}));
    imm->callback([&] { run = [&] { return cmd_immanant(cfg, imm_lambda, imm_matrix, imm_minus, imm_plus, imm_method); }; });

    auto* chr = app.add_subcommand("character", "Character table of S_k, or one value");
    int chr_k = -1;
    std::string chr_lambda, chr_rho;
    chr->add_option("--k", chr_k, "Table for S_k");
    chr->add_option("--lambda", chr_lambda, "Irreducible, e.g. 2,1");
    chr->add_option("--rho", chr_rho, "Cycle type, e.g. 1,1,1");
    chr->callback([&] { run = [&] { return cmd_character(cfg, chr_k, chr_lambda, chr_rho); }; });

    auto* kos = app.add_subcommand("kostka", "Kostka numbers or their inverses");
    int kos_k = -1;
    std::string kos_lambda, kos_mu;
    bool kos_inverse = false;
    kos->add_option("--k", kos_k, "Full matrix for partitions of k");
    kos->add_option("--lambda", kos_lambda, "Shape");
    kos->add_option("--mu", kos_mu, "Weight");
    kos->add_flag("--inverse", kos_inverse, "Inverse Kostka numbers");
    kos->callback([&] { run = [&] { return cmd_kostka(cfg, kos_k, kos_lambda, kos_mu, kos_inverse); }; });

    auto* ver = app.add_subcommand("verify", "Run invariant suites; exit 1 on any failure");
    std::string suite = "all", wg_table;
    long ver_mc = McConfig{}.samples;
    bool no_mc = false;
    std::vector<std::string> suites{"all"};
    for (const auto& s : suite_names()) suites.push_back(s);
    ver->add_option("suite", suite, "all, weingarten, immanant, identities or commutator")->check(CLI::IsMember(suites));
    ver->add_option("--mc", ver_mc, "Monte Carlo samples per check");
    ver->add_flag("--no-mc", no_mc, "Skip the Monte Carlo checks");
    ver->add_option("--wg-table", wg_table, "JSON file overriding Weingarten tables (one object or an array)");
    ver->callback([&] { run = [&] { return cmd_verify(cfg, suite, ver_mc, no_mc, wg_table); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        cfg.validate();
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
