#include "ffp/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ffp {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be a JSON array");
    return j;
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string join_parts(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    fail("expected a rational as a \"p/q\" string or an integer");
}

Json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& v : array(j, "partition")) parts.push_back(integer(v, "partition part"));
    return Partition(std::move(parts));
}

Json set_partition_to_json(const SetPartition& p) { return p.blocks(); }

SetPartition set_partition_from_json(const Json& j) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : array(j, "set partition")) {
        std::vector<int> block;
        for (const auto& v : array(b, "block")) block.push_back(integer(v, "block element"));
        blocks.push_back(std::move(block));
    }
    return SetPartition(std::move(blocks));
}

Json spectrum_to_json(const Spectrum& s) {
    Json out = Json::array();
    for (const auto& v : s.values()) out.push_back(rational_to_json(v));
    return out;
}

Spectrum spectrum_from_json(const Json& j) {
    std::vector<Rational> values;
    for (const auto& v : array(j, "spectrum")) values.push_back(rational_from_json(v));
    return Spectrum(std::move(values));
}

Json poly_to_json(const MonicPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.a()) a.push_back(rational_to_json(c));
    return {{"d", p.degree()}, {"a", a}};
}

MonicPoly poly_from_json(const Json& j) {
    const int d = integer(field(j, "d"), "d");
    std::vector<Rational> a;
    for (const auto& v : array(field(j, "a"), "a")) a.push_back(rational_from_json(v));
    if (d < 0 || static_cast<int>(a.size()) != d + 1) fail("polynomial: \"a\" must have d+1 entries");
    return MonicPoly(std::move(a));
}

Json expansion_to_json(const SymExpansion& e) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : e.terms())
        terms.push_back({{"partition", partition_to_json(lambda)}, {"coeff", rational_to_json(c)}});
    return {{"basis", basis_name(e.basis())}, {"k", e.degree()}, {"terms", terms}};
}

SymExpansion expansion_from_json(const Json& j) {
    const auto& basis = field(j, "basis");
    if (!basis.is_string()) fail("basis must be a string");
    SymExpansion out(parse_basis(basis.get<std::string>()), integer(field(j, "k"), "k"));
    for (const auto& t : array(field(j, "terms"), "terms"))
        out.add(partition_from_json(field(t, "partition")), rational_from_json(field(t, "coeff")));
    return out;
}

Json weingarten_to_json(const ClassFunction& wg, int d) {
    Json values = Json::array();
    for (const auto& [rho, v] : wg.values())
        values.push_back({{"cycle_type", partition_to_json(rho)}, {"rational", rational_to_json(v)}});
    return {{"k", wg.k()}, {"d", d}, {"values", values}};
}

ClassFunction class_function_from_json(const Json& j) {
    const int k = integer(field(j, "k"), "k");
    if (k < 0) fail("k must be non-negative");
    ClassFunction out(k);
    std::size_t seen = 0;
    for (const auto& entry : array(field(j, "values"), "values")) {
        const Partition rho = partition_from_json(field(entry, "cycle_type"));
        if (rho.size() != k) fail("cycle type " + rho.to_string() + " is not a partition of k");
        out.set(rho, rational_from_json(field(entry, "rational")));
        ++seen;
    }
    if (seen != out.values().size()) fail("class function must list every cycle type exactly once");
    return out;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m.rows()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rational_to_json(v));
        out.push_back(std::move(r));
    }
    return out;
}

RationalMatrix matrix_from_json(const Json& j) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : array(j, "matrix")) {
        std::vector<Rational> r;
        for (const auto& v : array(row, "matrix row")) r.push_back(rational_from_json(v));
        rows.push_back(std::move(r));
    }
    return RationalMatrix(rows);
}

Json character_table_to_json(const CharacterTable& t) {
    Json values = Json::object();
    for (std::size_t a = 0; a < t.irreps.size(); ++a)
        for (std::size_t b = 0; b < t.classes.size(); ++b)
            values[join_parts(t.irreps[a]) + "|" + join_parts(t.classes[b])] = t.values[a][b].convert_to<long long>();
    return {{"k", t.k}, {"values", values}};
}

CharacterTable character_table_from_json(const Json& j) {
    CharacterTable t;
    t.k = integer(field(j, "k"), "k");
    t.irreps = partitions_of(t.k);
    t.classes = t.irreps;
    t.values.assign(t.irreps.size(), std::vector<Integer>(t.classes.size()));
    const auto& values = field(j, "values");
    if (!values.is_object() || values.size() != t.irreps.size() * t.classes.size())
        fail("character table must have one entry per (irrep, class) pair");
    auto index_of = [&](const std::string& text) {
        const Partition p = text.empty() ? Partition() : parse_partition(text);
        const auto it = std::find(t.irreps.begin(), t.irreps.end(), p);
        if (it == t.irreps.end()) fail("\"" + text + "\" is not a partition of k");
        return static_cast<std::size_t>(it - t.irreps.begin());
    };
    for (const auto& [key, v] : values.items()) {
        const auto bar = key.find('|');
        if (bar == std::string::npos) fail("character key must look like \"lambda|rho\"");
        t.values[index_of(key.substr(0, bar))][index_of(key.substr(bar + 1))] = integer(v, "character value");
    }
    return t;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double x = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) fail("malformed decimal \"" + text + "\"");
    return x;
}

Json mc_report_to_json(const McReport& r) {
    Json estimates = Json::array();
    for (std::size_t i = 0; i < r.labels.size(); ++i)
        estimates.push_back(
            {{"label", r.labels[i]}, {"mean", format_double(r.mean[i])}, {"std_error", format_double(r.std_error[i])}});
    return {{"seed", r.seed},
            {"samples", r.samples},
            {"chunk_size", r.chunk_size},
            {"max_unitarity_residual", format_double(r.max_unitarity_residual)},
            {"estimates", estimates}};
}

McReport mc_report_from_json(const Json& j) {
    McReport r;
    const auto& seed = field(j, "seed");
    if (!seed.is_number_unsigned()) fail("seed must be a non-negative integer");
    r.seed = seed.get<std::uint64_t>();
    r.samples = integer(field(j, "samples"), "samples");
    r.chunk_size = integer(field(j, "chunk_size"), "chunk_size");
    r.max_unitarity_residual = parse_double(field(j, "max_unitarity_residual").get<std::string>());
    for (const auto& e : array(field(j, "estimates"), "estimates")) {
        r.labels.push_back(field(e, "label").get<std::string>());
        r.mean.push_back(parse_double(field(e, "mean").get<std::string>()));
        r.std_error.push_back(parse_double(field(e, "std_error").get<std::string>()));
    }
    return r;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

}  // namespace ffp
