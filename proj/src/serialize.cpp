#include "totref/serialize.hpp"

#include <fstream>

namespace totref {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t require_count(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_unsigned()) throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

std::string require_string(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

void check_schema_version(const json& j) {
    if (j.is_object() && j.contains("schema_version")) {
        const json& v = j.at("schema_version");
        if (!v.is_string() || v.get<std::string>() != kSchemaVersion)
            throw ParseError("unsupported schema_version");
    }
}

FieldSpec field_from(const json& j) {
    try {
        return FieldSpec::parse(require_string(j, "field"));
    } catch (const ParseError&) {
        throw;
    }
}

RingDescriptor ring_from(const json& j) {
    std::size_t i = require_count(j, "i");
    if (i < 2) throw ParseError("\"i\" must be at least 2");
    return RingDescriptor(i, field_from(j));
}

Scalar scalar_from(const json& v, const FieldSpec& field) {
    if (!v.is_string()) throw ParseError("scalar values must be strings");
    return Scalar::parse(field, v.get<std::string>());
}

}  // namespace

json grid_to_json(const KMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

KMatrix grid_from_json(const json& j, const FieldSpec& field, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("grid has the wrong number of rows");
    KMatrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || row.size() != cols) throw ParseError("grid row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from(row.at(c), field);
    }
    return m;
}

json to_json(const MatrixTuple& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = t.ring().field().name();
    j["i"] = t.ring().i();
    j["n"] = t.n();
    json parts = json::array();
    for (std::size_t k = 1; k <= t.count(); ++k) parts.push_back(grid_to_json(t.part(k)));
    j["B"] = std::move(parts);
    return j;
}

MatrixTuple tuple_from_json(const json& j) {
    check_schema_version(j);
    RingDescriptor ring = ring_from(j);
    std::size_t n = require_count(j, "n");
    if (n < 1) throw ParseError("\"n\" must be at least 1");
    const json& parts = require(j, "B");
    if (!parts.is_array() || parts.size() != ring.i())
        throw ParseError("\"B\" must hold exactly i grids");
    std::vector<KMatrix> grids;
    grids.reserve(ring.i());
    for (std::size_t k = 0; k < ring.i(); ++k)
        grids.push_back(grid_from_json(parts.at(k), ring.field(), n, n));
    return MatrixTuple(ring, std::move(grids));
}

json to_json(const LinearMatrix& m) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = m.ring().field().name();
    j["i"] = m.ring().i();
    j["n"] = m.n();
    j["X"] = grid_to_json(m.x_part());
    json ys = json::array();
    for (std::size_t k = 1; k <= m.ring().i(); ++k) ys.push_back(grid_to_json(m.y_part(k)));
    j["Y"] = std::move(ys);
    return j;
}

LinearMatrix linear_matrix_from_json(const json& j) {
    check_schema_version(j);
    RingDescriptor ring = ring_from(j);
    std::size_t n = require_count(j, "n");
    KMatrix x = grid_from_json(require(j, "X"), ring.field(), n, n);
    const json& ys = require(j, "Y");
    if (!ys.is_array() || ys.size() != ring.i()) throw ParseError("\"Y\" must hold exactly i grids");
    std::vector<KMatrix> y_parts;
    y_parts.reserve(ring.i());
    for (std::size_t k = 0; k < ring.i(); ++k)
        y_parts.push_back(grid_from_json(ys.at(k), ring.field(), n, n));
    return LinearMatrix(ring, std::move(x), std::move(y_parts));
}

json to_json(const SMatrix& m) {
    const RingDescriptor& ring = m.ring();
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = ring.field().name();
    j["i"] = ring.i();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            json entry = json::object();
            for (std::size_t mu = 0; mu < ring.dim(); ++mu) {
                const Scalar& coeff = m.at(r, c).coeff(mu);
                if (!coeff.is_zero()) entry[ring.monomial_name(mu)] = coeff.str();
            }
            row.push_back(std::move(entry));
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

SMatrix smatrix_from_json(const json& j) {
    check_schema_version(j);
    RingDescriptor ring = ring_from(j);
    std::size_t rows = require_count(j, "rows");
    std::size_t cols = require_count(j, "cols");
    const json& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("\"entries\" has the wrong number of rows");
    SMatrix m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = entries.at(r);
        if (!row.is_array() || row.size() != cols) throw ParseError("entry row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& entry = row.at(c);
            if (!entry.is_object()) throw ParseError("entries must be monomial-keyed objects");
            SElement e = SElement::zero(ring);
            for (auto it = entry.begin(); it != entry.end(); ++it) {
                auto idx = ring.monomial_index(it.key());
                if (!idx) throw ParseError("unknown monomial \"" + it.key() + "\"");
                e.coeff(*idx) = scalar_from(it.value(), ring.field());
            }
            m.at(r, c) = e;
        }
    }
    return m;
}

json to_json(const FDModule& m) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = m.ring().field().name();
    j["i"] = m.ring().i();
    j["dim"] = m.dim();
    j["act_x"] = grid_to_json(m.act_x());
    json ys = json::array();
    for (std::size_t k = 1; k <= m.ring().i(); ++k) ys.push_back(grid_to_json(m.act_y(k)));
    j["act_y"] = std::move(ys);
    return j;
}

json to_json(const AcyclicityReport& r) {
    json j;
    j["n"] = r.n;
    j["expected_rank_sum"] = r.total;
    j["rank_d"] = r.rank_d;
    j["rank_sigma"] = r.rank_sigma;
    j["dual_rank_d"] = r.dual_rank_d;
    j["dual_rank_sigma"] = r.dual_rank_sigma;
    j["composition_zero"] = r.composition_zero;
    j["exact"] = r.exact;
    j["dual_composition_zero"] = r.dual_composition_zero;
    j["dual_exact"] = r.dual_exact;
    j["pass"] = r.pass();
    return j;
}

json to_json(const YoshinoReport& r) {
    json j;
    j["e"] = r.e;
    j["ring_dim"] = r.ring_dim;
    j["socle_rank"] = r.socle;
    j["m2_dim"] = r.m2_dim;
    j["module_length"] = r.module_length;
    j["expected_length"] = r.expected_length;
    j["min_gens"] = r.min_gens;
    j["betti"] = r.betti;
    j["a_ann_m_equals_m2"] = r.a_ann_m_equals_m2;
    j["b_lengths"] = r.b_lengths;
    j["c_module_length"] = r.c_module_length;
    j["f_constant_betti"] = r.f_constant_betti;
    j["f_linear_differentials"] = r.f_linear_differentials;
    j["pass"] = r.pass();
    return j;
}

json to_json(const ConjugacyDecision& d) {
    json j;
    switch (d.status) {
        case ConjugacyDecision::Status::Conjugate: j["status"] = "yes"; break;
        case ConjugacyDecision::Status::NotConjugate: j["status"] = "no"; break;
        case ConjugacyDecision::Status::Inconclusive: j["status"] = "inconclusive"; break;
    }
    j["certainty"] = d.certainty == Certainty::Certain ? "certain" : "high_confidence";
    j["intertwiner_dim"] = d.intertwiner_dim;
    j["method"] = d.method;
    j["witness"] = d.witness ? grid_to_json(*d.witness) : json(nullptr);
    return j;
}

json to_json(const IndecomposabilityAnswer& a) {
    json j;
    switch (a.status) {
        case IndecomposabilityAnswer::Status::Indecomposable: j["status"] = "indecomposable"; break;
        case IndecomposabilityAnswer::Status::Decomposable: j["status"] = "decomposable"; break;
        case IndecomposabilityAnswer::Status::Unknown: j["status"] = "unknown"; break;
    }
    j["method"] = a.method;
    j["idempotent"] = a.idempotent ? grid_to_json(*a.idempotent) : json(nullptr);
    return j;
}

SElement parse_element_expression(const RingDescriptor& ring, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty element expression");

    SElement out = SElement::zero(ring);
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    while (pos <= s.size()) {
        // one term: [scalar] [* atom] | atom
        std::size_t start = pos;
        std::string literal;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            literal += s[pos++];
        Scalar coeff = Scalar::one(ring.field());
        bool have_coeff = !literal.empty();
        if (have_coeff) coeff = Scalar::parse(ring.field(), literal);
        bool have_atom = false;
        if (pos < s.size() && (s[pos] == '*' || s[pos] == 'x' || s[pos] == 'y')) {
            if (s[pos] == '*') {
                if (!have_coeff) throw ParseError("dangling '*' in expression");
                ++pos;
            }
            // juxtaposition like "2x" reads as multiplication
            if (pos >= s.size()) throw ParseError("trailing '*' in expression");
            if (s[pos] == 'x') {
                out.coeff(RingDescriptor::kX) += negative ? -coeff : coeff;
                ++pos;
                have_atom = true;
            } else if (s[pos] == 'y') {
                ++pos;
                std::string num;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num += s[pos++];
                if (num.empty()) throw ParseError("y must carry an index, e.g. y1");
                std::size_t jdx = std::stoul(num);
                if (jdx < 1 || jdx > ring.i()) throw ParseError("y index out of range: y" + num);
                out.coeff(ring.y_index(jdx)) += negative ? -coeff : coeff;
                have_atom = true;
            } else {
                throw ParseError("expected x or yJ after '*'");
            }
        }
        if (!have_atom) {
            if (!have_coeff || pos == start) throw ParseError("malformed term in expression");
            out.coeff(RingDescriptor::kUnit) += negative ? -coeff : coeff;
        }
        if (pos == s.size()) break;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
            if (pos == s.size()) throw ParseError("trailing sign in expression");
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in expression");
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in file: " + path);
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace totref
