#include "zetask/complex_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace zetask {

namespace {

using Json = nlohmann::ordered_json;

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ParseResult run() {
        Json doc;
        try {
            doc = Json::parse(text_);
        } catch (const Json::parse_error& e) {
            issue("", std::string("not valid JSON: ") + e.what());
            return finish();
        }
        if (!doc.is_object()) {
            issue("", "top level must be an object");
            return finish();
        }
        check_keys(doc, "", {"format", "mode", "ambient_dimension", "vertices", "cells"});

        std::string format = get_string(doc, "", "format").value_or("");
        if (format != "strata-complex/1" && !format.empty())
            issue("/format", "unsupported format version \"" + format + "\" (expected \"strata-complex/1\")");

        std::string mode = get_string(doc, "", "mode").value_or("");
        if (mode == "hypersurface") c_.mode = ComplexMode::Hypersurface;
        else if (mode == "degeneration") c_.mode = ComplexMode::Degeneration;
        else if (!mode.empty()) issue("/mode", "mode must be \"hypersurface\" or \"degeneration\"");

        if (auto n = get_int(doc, "", "ambient_dimension")) {
            if (*n < 1) issue("/ambient_dimension", "ambient_dimension must be >= 1");
            else c_.ambient_dimension = static_cast<int>(*n);
        }

        parse_vertices(doc);
        parse_cells(doc);

        if (issues_.empty()) {
            for (const Violation& v : validate(c_))
                issue(pointer_of(v.subject), v.message);
        }
        return finish();
    }

private:
    void parse_vertices(const Json& doc) {
        auto it = doc.find("vertices");
        if (it == doc.end() || !it->is_array()) {
            issue("/vertices", "missing or non-array \"vertices\"");
            return;
        }
        std::size_t i = 0;
        for (const Json& jv : *it) {
            std::string p = "/vertices/" + std::to_string(i);
            if (!jv.is_object()) {
                issue(p, "vertex entry must be an object");
                ++i;
                continue;
            }
            check_keys(jv, p, {"id", "label", "N", "nu", "exceptional", "meets_x", "class_poly"});
            Divisor v;
            v.id = get_string(jv, p, "id").value_or("");
            v.label = get_string(jv, p, "label").value_or("");
            if (auto n = get_int(jv, p, "N")) v.N = *n;
            if (auto n = get_int(jv, p, "nu")) v.nu = *n;
            if (auto b = get_bool(jv, p, "exceptional")) v.exceptional = *b;
            if (auto b = get_bool(jv, p, "meets_x")) v.meets_x = *b;
            if (jv.contains("class_poly")) v.class_poly = parse_laurent(jv["class_poly"], p + "/class_poly", "L");
            if (v.N < 1) issue(p + "/N", "vertex " + v.id + ": N must be a positive integer");
            if (v.nu < 1) issue(p + "/nu", "vertex " + v.id + ": nu must be a positive integer");
            vertex_pointer_[v.id] = p;
            c_.vertices.push_back(std::move(v));
            ++i;
        }
    }

    void parse_cells(const Json& doc) {
        auto it = doc.find("cells");
        if (it == doc.end() || !it->is_array()) {
            issue("/cells", "missing or non-array \"cells\"");
            return;
        }
        std::size_t i = 0;
        for (const Json& js : *it) {
            std::string p = "/cells/" + std::to_string(i);
            if (!js.is_object()) {
                issue(p, "cell entry must be an object");
                ++i;
                continue;
            }
            check_keys(js, p,
                       {"id", "vertices", "chi_over_x", "over_x", "class_over_x",
                        "class_over_x_poincare", "faces"});
            Stratum s;
            s.id = get_string(js, p, "id").value_or("");
            // chi_over_x is a required key; null records an absent value.
            if (!js.contains("chi_over_x"))
                issue(p + "/chi_over_x", "missing required key \"chi_over_x\"");
            else if (js["chi_over_x"].is_number_integer())
                s.chi_over_x = js["chi_over_x"].get<std::int64_t>();
            else if (!js["chi_over_x"].is_null())
                issue(p + "/chi_over_x", "\"chi_over_x\" must be an integer or null");
            s.vertices = get_string_array(js, p, "vertices");
            std::sort(s.vertices.begin(), s.vertices.end());
            s.faces = get_string_array(js, p, "faces");
            if (js.contains("class_over_x") && js.contains("class_over_x_poincare"))
                issue(p, "cell " + s.id + ": class_over_x and class_over_x_poincare are mutually exclusive");
            if (js.contains("class_over_x"))
                s.class_over_x = parse_laurent(js["class_over_x"], p + "/class_over_x", "L");
            if (js.contains("class_over_x_poincare"))
                s.poincare_over_x = parse_laurent(js["class_over_x_poincare"], p + "/class_over_x_poincare", "u");
            if (auto b = get_bool_optional(js, p, "over_x")) {
                s.over_x = *b;
            } else {
                // Default: in degeneration mode every stratum lies over the
                // closed point; in hypersurface mode a stratum lies over x
                // when all its components do.
                if (c_.mode == ComplexMode::Degeneration) {
                    s.over_x = true;
                } else {
                    bool all = !s.vertices.empty();
                    for (const auto& vid : s.vertices) {
                        const Divisor* v = c_.find_vertex(vid);
                        all = all && v && v->meets_x;
                    }
                    s.over_x = all;
                }
            }
            cell_pointer_[s.id] = p;
            c_.cells.push_back(std::move(s));
            ++i;
        }
    }

    LaurentPoly parse_laurent(const Json& j, const std::string& p, const std::string& var) {
        LaurentPoly poly(var);
        if (!j.is_array()) {
            issue(p, "Laurent polynomial must be an array of [exponent, numerator, denominator]");
            return poly;
        }
        std::size_t i = 0;
        for (const Json& t : j) {
            std::string tp = p + "/" + std::to_string(i);
            if (!t.is_array() || t.size() != 3) {
                issue(tp, "term must be [exponent, numerator, denominator]");
                ++i;
                continue;
            }
            auto e = as_bigint(t[0], tp + "/0");
            auto num = as_bigint(t[1], tp + "/1");
            auto den = as_bigint(t[2], tp + "/2");
            if (!e || !num || !den) { ++i; continue; }
            if (*den <= 0) {
                issue(tp + "/2", "denominator must be a positive integer");
                ++i;
                continue;
            }
            if (*e > BigInt(1) << 40 || *e < -(BigInt(1) << 40)) {
                issue(tp + "/0", "exponent out of range");
                ++i;
                continue;
            }
            poly += LaurentPoly::monomial(var, static_cast<std::int64_t>(*e), Rational(*num, *den));
            ++i;
        }
        return poly;
    }

    std::optional<BigInt> as_bigint(const Json& j, const std::string& p) {
        if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
        if (j.is_string()) {
            try {
                return BigInt(j.get<std::string>());
            } catch (const std::runtime_error&) {
            }
        }
        issue(p, "expected an integer (number or decimal string)");
        return std::nullopt;
    }

    void check_keys(const Json& obj, const std::string& p, std::initializer_list<const char*> allowed) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char* k : allowed) ok = ok || it.key() == k;
            if (!ok) issue(p + "/" + it.key(), "unknown key \"" + it.key() + "\"");
        }
    }

    std::optional<std::string> get_string(const Json& obj, const std::string& p, const char* key) {
        if (!obj.contains(key)) {
            issue(p + "/" + key, std::string("missing required key \"") + key + "\"");
            return std::nullopt;
        }
        if (!obj[key].is_string()) {
            issue(p + "/" + key, std::string("\"") + key + "\" must be a string");
            return std::nullopt;
        }
        return obj[key].get<std::string>();
    }

    std::optional<std::int64_t> get_int(const Json& obj, const std::string& p, const char* key) {
        if (!obj.contains(key)) {
            issue(p + "/" + key, std::string("missing required key \"") + key + "\"");
            return std::nullopt;
        }
        if (!obj[key].is_number_integer()) {
            issue(p + "/" + key, std::string("\"") + key + "\" must be an integer");
            return std::nullopt;
        }
        return obj[key].get<std::int64_t>();
    }

    std::optional<bool> get_bool(const Json& obj, const std::string& p, const char* key) {
        if (!obj.contains(key)) {
            issue(p + "/" + key, std::string("missing required key \"") + key + "\"");
            return std::nullopt;
        }
        return get_bool_optional(obj, p, key);
    }

    std::optional<bool> get_bool_optional(const Json& obj, const std::string& p, const char* key) {
        if (!obj.contains(key)) return std::nullopt;
        if (!obj[key].is_boolean()) {
            issue(p + "/" + key, std::string("\"") + key + "\" must be a boolean");
            return std::nullopt;
        }
        return obj[key].get<bool>();
    }

    std::vector<std::string> get_string_array(const Json& obj, const std::string& p, const char* key) {
        std::vector<std::string> out;
        if (!obj.contains(key) || !obj[key].is_array()) {
            issue(p + "/" + key, std::string("missing or non-array \"") + key + "\"");
            return out;
        }
        std::size_t i = 0;
        for (const Json& e : obj[key]) {
            if (!e.is_string())
                issue(p + "/" + key + "/" + std::to_string(i), "expected a string");
            else
                out.push_back(e.get<std::string>());
            ++i;
        }
        return out;
    }

    std::string pointer_of(const std::string& subject) const {
        if (auto it = vertex_pointer_.find(subject); it != vertex_pointer_.end()) return it->second;
        if (auto it = cell_pointer_.find(subject); it != cell_pointer_.end()) return it->second;
        return "";
    }

    void issue(const std::string& pointer, const std::string& message) {
        issues_.push_back(ParseIssue{pointer, message});
    }

    ParseResult finish() {
        ParseResult r;
        r.issues = std::move(issues_);
        if (r.issues.empty()) r.complex = std::move(c_);
        return r;
    }

    const std::string& text_;
    StrataComplex c_;
    std::vector<ParseIssue> issues_;
    std::map<std::string, std::string> vertex_pointer_;
    std::map<std::string, std::string> cell_pointer_;
};

Json laurent_to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term = Json::array();
        term.push_back(e);
        BigInt num = rat_num(c), den = rat_den(c);
        auto push = [&term](const BigInt& v) {
            if (v >= std::numeric_limits<std::int64_t>::min() &&
                v <= std::numeric_limits<std::int64_t>::max())
                term.push_back(static_cast<std::int64_t>(v));
            else
                term.push_back(v.str());
        };
        push(num);
        push(den);
        arr.push_back(std::move(term));
    }
    return arr;
}

} // namespace

ParseResult parse_complex(const std::string& text) { return Parser(text).run(); }

StrataComplex parse_complex_or_throw(const std::string& text) {
    ParseResult r = parse_complex(text);
    if (r.complex) return std::move(*r.complex);
    std::ostringstream msg;
    msg << "cannot parse strata complex:";
    for (const auto& i : r.issues)
        msg << "\n  " << (i.pointer.empty() ? "(document)" : i.pointer) << ": " << i.message;
    throw DataError(msg.str());
}

std::string emit_complex(const StrataComplex& c) {
    Json doc;
    doc["format"] = "strata-complex/1";
    doc["mode"] = c.mode == ComplexMode::Hypersurface ? "hypersurface" : "degeneration";
    doc["ambient_dimension"] = c.ambient_dimension;
    Json vs = Json::array();
    for (const Divisor& v : c.vertices) {
        Json jv;
        jv["id"] = v.id;
        jv["label"] = v.label;
        jv["N"] = v.N;
        jv["nu"] = v.nu;
        jv["exceptional"] = v.exceptional;
        jv["meets_x"] = v.meets_x;
        if (v.class_poly) jv["class_poly"] = laurent_to_json(*v.class_poly);
        vs.push_back(std::move(jv));
    }
    doc["vertices"] = std::move(vs);
    Json cs = Json::array();
    for (const Stratum& s : c.cells) {
        Json js;
        js["id"] = s.id;
        js["vertices"] = s.vertices;
        js["chi_over_x"] = s.chi_over_x ? Json(*s.chi_over_x) : Json();
        js["over_x"] = s.over_x;
        if (s.class_over_x) js["class_over_x"] = laurent_to_json(*s.class_over_x);
        if (s.poincare_over_x) js["class_over_x_poincare"] = laurent_to_json(*s.poincare_over_x);
        js["faces"] = s.faces;
        cs.push_back(std::move(js));
    }
    doc["cells"] = std::move(cs);
    return doc.dump(2) + "\n";
}

StrataComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex_or_throw(buf.str());
}

} // namespace zetask
