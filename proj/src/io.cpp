/*
   Copyright 2026 The signrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "signrep/io.hpp"

#include "signrep/error.hpp"

#include <cstdio>
#include <functional>

namespace signrep::io {

namespace {

std::string where(const std::string& ptr) { return ptr.empty() ? "/" : ptr; }

[[noreturn]] void bad(const std::string& ptr, const std::string& what) {
    fail(ErrorKind::ParseError, where(ptr) + ": " + what);
}

// Library errors raised while building a value keep their kind and gain the pointer.
template <class F>
auto located(const std::string& ptr, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        std::string msg = e.what();
        const std::string prefix = std::string(to_string(e.kind())) + ": ";
        if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
        if (msg.rfind("/", 0) == 0) throw;
        throw Error(e.kind(), where(ptr) + ": " + msg);
    }
}

const Json& member(const Json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object()) bad(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(ptr, "missing member \"" + key + "\"");
    return *it;
}

const Json* optional_member(const Json& j, const std::string& key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string str_member(const Json& j, const std::string& key, const std::string& ptr) {
    const Json& v = member(j, key, ptr);
    if (!v.is_string()) bad(ptr + "/" + key, "expected a string");
    return v.get<std::string>();
}

std::uint64_t uint_value(const Json& v, const std::string& ptr) {
    if (!v.is_number_integer() || v.get<long long>() < 0) bad(ptr, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::size_t index_value(const Json& v, const std::string& ptr, std::size_t bound) {
    const std::uint64_t x = uint_value(v, ptr);
    if (x >= bound) bad(ptr, "index " + std::to_string(x) + " out of range");
    return static_cast<std::size_t>(x);
}

const Json& array_value(const Json& v, const std::string& ptr) {
    if (!v.is_array()) bad(ptr, "expected an array");
    return v;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

Json poly_to_json(const Field& B, const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p) out.push_back(elem_to_json(B, c));
    return out;
}

Elem poly_value(const Field& F, const Field& B, const Json& arr, const std::string& ptr) {
    Elem acc = F.zero();
    const Elem x = F.generator();
    Elem power = F.one();
    for (std::size_t i = 0; i < array_value(arr, ptr).size(); ++i) {
        acc = F.add(acc, F.mul(F.embed(parse_elem(B, arr[i], child(ptr, i))), power));
        power = F.mul(power, x);
    }
    return acc;
}

Json character_json(const Field& F, const std::vector<Elem>& values) {
    Json out = Json::array();
    for (const auto& x : values) out.push_back(elem_to_json(F, x));
    return out;
}

struct ParsedGroup {
    InvolutiveGroup group;
    bool table_mode;
    // generator mode: the group's own matrices, when over the representation field
    std::optional<std::vector<Matrix>> own_images;
};

ParsedGroup parse_group(const Json& g, const Field& field, const std::string& ptr) {
    const std::string mode = str_member(g, "mode", ptr);
    if (mode == "table") {
        const std::string mp = ptr + "/mul";
        const Json& mul = array_value(member(g, "mul", ptr), mp);
        const std::size_t n = mul.size();
        if (n == 0) bad(mp, "empty multiplication table");
        std::vector<std::vector<std::size_t>> table(n);
        for (std::size_t a = 0; a < n; ++a) {
            const Json& row = array_value(mul[a], child(mp, a));
            if (row.size() != n) bad(child(mp, a), "row length differs from the table size");
            for (std::size_t b = 0; b < n; ++b) table[a].push_back(index_value(row[b], child(child(mp, a), b), n));
        }
        FiniteGroup G = located(mp, [&] { return FiniteGroup::from_table(table); });
        std::vector<std::size_t> c(n);
        if (const Json* ic = optional_member(g, "inv_c")) {
            const std::string cp = ptr + "/inv_c";
            if (array_value(*ic, cp).size() != n) bad(cp, "needs one entry per element");
            for (std::size_t a = 0; a < n; ++a) c[a] = index_value((*ic)[a], child(cp, a), n);
        } else {
            for (std::size_t a = 0; a < n; ++a) c[a] = a;
        }
        return {located(ptr + "/inv_c", [&] { return InvolutiveGroup(G, c); }), true, std::nullopt};
    }
    if (mode != "generators") bad(ptr + "/mode", "unknown group mode \"" + mode + "\"");

    Field gfield = field;
    if (const Json* gf = optional_member(g, "field")) gfield = parse_field(*gf, ptr + "/field");
    const std::string mp = ptr + "/mats";
    const Json& mats = array_value(member(g, "mats", ptr), mp);
    if (mats.empty()) bad(mp, "need at least one generator");
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < mats.size(); ++i) gens.push_back(parse_matrix(gfield, mats[i], child(mp, i)));
    FiniteGroup G = located(mp, [&] { return FiniteGroup::from_matrices(gens); });
    if (G.generators().size() != gens.size()) bad(mp, "generators must be distinct and nontrivial");

    std::optional<InvolutiveGroup> ig;
    const Json* cj = optional_member(g, "c");
    const std::string kind = cj ? str_member(*cj, "kind", ptr + "/c") : "identity";
    if (kind == "identity") {
        ig = InvolutiveGroup::trivial_involution(G);
    } else if (kind == "conjugation") {
        const Matrix m = parse_matrix(gfield, member(*cj, "mat", ptr + "/c"), ptr + "/c/mat");
        ig = located(ptr + "/c", [&] { return InvolutiveGroup::conjugation(G, m); });
    } else if (kind == "inverse_transpose") {
        ig = located(ptr + "/c", [&] { return InvolutiveGroup::inverse_transpose(G); });
    } else {
        bad(ptr + "/c/kind", "unknown involution kind \"" + kind + "\"");
    }
    std::optional<std::vector<Matrix>> own;
    if (gfield == field) own = gens;
    return {*ig, false, own};
}

InvolutiveRep parse_rep_over(const Json& j, const Field& field) {
    ParsedGroup pg = parse_group(member(j, "group", ""), field, "/group");
    const FiniteGroup& G = pg.group.group();
    const std::size_t count = pg.table_mode ? G.order() : G.generators().size();

    std::vector<Matrix> images;
    if (const Json* im = optional_member(j, "images")) {
        if (array_value(*im, "/images").size() != count)
            bad("/images", std::string("needs one matrix per ") + (pg.table_mode ? "element" : "generator"));
        for (std::size_t i = 0; i < count; ++i) images.push_back(parse_matrix(field, (*im)[i], child("/images", i)));
    } else if (pg.own_images) {
        images = *pg.own_images;
    } else {
        bad("", "missing member \"images\"");
    }

    std::vector<Elem> chi;
    const Json* cj = optional_member(j, "character");
    if (!cj || (cj->is_string() && cj->get<std::string>() == "trivial")) {
        chi.assign(count, field.one());
    } else {
        const Json& vals = array_value(member(*cj, "values", "/character"), "/character/values");
        if (vals.size() != count) bad("/character/values", "wrong number of character values");
        for (std::size_t i = 0; i < count; ++i) chi.push_back(parse_elem(field, vals[i], child("/character/values", i)));
    }

    if (pg.table_mode) return located("/images", [&] { return make_rep(pg.group, field, images, chi); });
    return located("/images", [&] { return rep_from_generators(pg.group, field, images, chi); });
}

}  // namespace

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("/: malformed JSON: ") + e.what());
    }
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Field parse_field(const Json& j, const std::string& ptr) {
    const std::string kind = str_member(j, "kind", ptr);
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime") {
        const std::uint64_t p = uint_value(member(j, "p", ptr), ptr + "/p");
        return located(ptr + "/p", [&] { return Field::prime(p); });
    }
    if (kind == "extension") {
        const Field base = parse_field(member(j, "base", ptr), ptr + "/base");
        const std::string mp = ptr + "/modulus";
        const Json& mod = array_value(member(j, "modulus", ptr), mp);
        Poly f;
        for (std::size_t i = 0; i < mod.size(); ++i) f.push_back(parse_elem(base, mod[i], child(mp, i)));
        bool certified = false;
        if (const Json* c = optional_member(j, "certified")) {
            if (!c->is_boolean()) bad(ptr + "/certified", "expected a boolean");
            certified = c->get<bool>();
        }
        return located(mp, [&] { return Field::extension(base, f, certified); });
    }
    if (kind == "function") return Field::function_field(parse_field(member(j, "base", ptr), ptr + "/base"));
    bad(ptr + "/kind", "unknown field kind \"" + kind + "\"");
}

Json field_to_json(const Field& F) {
    switch (F.kind()) {
        case FieldKind::rationals: return Json{{"kind", "rationals"}};
        case FieldKind::prime: return Json{{"kind", "prime"}, {"p", F.p()}};
        case FieldKind::extension:
            return Json{{"kind", "extension"}, {"base", field_to_json(F.base())}, {"modulus", poly_to_json(F.base(), F.modulus())}};
        case FieldKind::function_field: return Json{{"kind", "function"}, {"base", field_to_json(F.base())}};
    }
    fail(ErrorKind::Internal, "unknown field kind");
}

Elem parse_elem(const Field& F, const Json& j, const std::string& ptr) {
    switch (F.kind()) {
        case FieldKind::rationals:
        case FieldKind::prime:
            if (j.is_number_integer()) {
                const Int n = j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<long long>());
                return F.from_integer(n);
            }
            if (j.is_string()) return located(ptr, [&] { return F.parse(j.get<std::string>()); });
            bad(ptr, "expected an integer or a \"p/q\" string");
        case FieldKind::extension:
            if (j.is_array()) return poly_value(F, F.base(), j, ptr);
            return F.embed(parse_elem(F.base(), j, ptr));
        case FieldKind::function_field: {
            if (j.is_array()) return poly_value(F, F.base(), j, ptr);
            if (j.is_object()) {
                const Elem num = poly_value(F, F.base(), member(j, "num", ptr), ptr + "/num");
                Elem den = F.one();
                if (const Json* d = optional_member(j, "den")) den = poly_value(F, F.base(), *d, ptr + "/den");
                if (F.is_zero(den)) bad(ptr + "/den", "zero denominator");
                return F.div(num, den);
            }
            return F.embed(parse_elem(F.base(), j, ptr));
        }
    }
    bad(ptr, "unsupported field");
}

Json elem_to_json(const Field& F, const Elem& x) {
    switch (F.kind()) {
        case FieldKind::rationals: return std::get<Rational>(x.v).str();
        case FieldKind::prime: return std::get<std::uint64_t>(x.v);
        case FieldKind::extension: return poly_to_json(F.base(), std::get<Poly>(x.v));
        case FieldKind::function_field: {
            const RatFn& f = std::get<RatFn>(x.v);
            return Json{{"num", poly_to_json(F.base(), f.num)}, {"den", poly_to_json(F.base(), f.den)}};
        }
    }
    fail(ErrorKind::Internal, "unknown field kind");
}

Matrix parse_matrix(const Field& F, const Json& j, const std::string& ptr) {
    const Json& rows = array_value(j, ptr);
    if (rows.empty()) bad(ptr, "empty matrix");
    const std::size_t c = array_value(rows[0], child(ptr, 0)).size();
    if (c == 0) bad(child(ptr, 0), "empty row");
    Matrix m(F, rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Json& row = array_value(rows[r], child(ptr, r));
        if (row.size() != c) bad(child(ptr, r), "ragged matrix");
        for (std::size_t k = 0; k < c; ++k) m(r, k) = parse_elem(F, row[k], child(child(ptr, r), k));
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(m.field(), m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Rational parse_rational(const Json& j, const std::string& ptr) {
    const Field Q = Field::rationals();
    if (!j.is_number_integer() && !j.is_string()) bad(ptr, "expected an integer or a \"p/q\" string");
    return std::get<Rational>(parse_elem(Q, j, ptr).v);
}

Json rational_to_json(const Rational& q) { return q.str(); }

InvolutiveRep parse_rep(const Json& j) {
    const Field F = parse_field(member(j, "field", ""), "/field");
    return parse_rep_over(j, F);
}

Json rep_to_json(const InvolutiveRep& rep) {
    const FiniteGroup& G = rep.group.group();
    Json mul = Json::array();
    for (std::size_t a = 0; a < G.order(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
        mul.push_back(std::move(row));
    }
    Json images = Json::array();
    for (const auto& m : rep.images) images.push_back(matrix_to_json(m));
    return Json{{"field", field_to_json(rep.field)},
                {"group", {{"mode", "table"}, {"mul", mul}, {"inv_c", rep.group.involution()}}},
                {"character", {{"values", character_json(rep.field, rep.character)}}},
                {"images", images}};
}

DvrRep parse_family(const Json& j) {
    const Json& dj = member(j, "dvr", "");
    const std::string kind = str_member(dj, "kind", "/dvr");
    std::optional<Dvr> O;
    if (kind == "p-adic") {
        const std::uint64_t p = uint_value(member(dj, "p", "/dvr"), "/dvr/p");
        O = located("/dvr/p", [&] { return Dvr::p_adic(p); });
    } else if (kind == "t-adic") {
        const Field k = parse_field(member(dj, "field", "/dvr"), "/dvr/field");
        O = located("/dvr/field", [&] { return Dvr::t_adic(k); });
    } else {
        bad("/dvr/kind", "unknown valuation ring kind \"" + kind + "\"");
    }
    if (optional_member(j, "field")) bad("/field", "families take their field from \"dvr\"");
    const InvolutiveRep rep = parse_rep_over(j, O->fraction_field());
    return located("/images", [&] { return make_dvr_rep(rep.group, *O, rep.images, rep.character); });
}

std::optional<std::size_t> family_precision(const Json& j) {
    const Json* p = optional_member(j, "precision");
    if (!p) return std::nullopt;
    return static_cast<std::size_t>(uint_value(*p, "/precision"));
}

WeightSlopeData parse_weights(const Json& j) {
    WeightSlopeData d;
    d.m = static_cast<std::size_t>(uint_value(member(j, "m", ""), "/m"));
    d.d = static_cast<std::size_t>(uint_value(member(j, "d", ""), "/d"));
    const Json& k = array_value(member(j, "k", ""), "/k");
    if (k.size() != d.m) bad("/k", "needs m rows");
    for (std::size_t i = 0; i < k.size(); ++i) {
        const Json& row = array_value(k[i], child("/k", i));
        if (row.size() != d.d) bad(child("/k", i), "needs d entries");
        std::vector<Rational> r;
        for (std::size_t s = 0; s < row.size(); ++s) r.push_back(parse_rational(row[s], child(child("/k", i), s)));
        d.k.push_back(std::move(r));
    }
    const Json& v = array_value(member(j, "v", ""), "/v");
    if (v.size() != d.m) bad("/v", "needs m entries");
    Rational scale = 1;
    if (const Json* s = optional_member(j, "scale")) scale = parse_rational(*s, "/scale");
    if (scale <= 0) bad("/scale", "scale must be positive");
    for (std::size_t i = 0; i < v.size(); ++i) d.v.push_back(parse_rational(v[i], child("/v", i)) * scale);
    if (const Json* p = optional_member(j, "vP0")) d.vp0 = parse_rational(*p, "/vP0");
    located("", [&] { validate(d); });
    return d;
}

Json weights_to_json(const WeightSlopeData& data) {
    Json k = Json::array();
    for (const auto& row : data.k) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(rational_to_json(x));
        k.push_back(std::move(r));
    }
    Json v = Json::array();
    for (const auto& x : data.v) v.push_back(rational_to_json(x));
    Json out{{"m", data.m}, {"d", data.d}, {"k", k}, {"v", v}, {"scale", "1"}};
    if (data.vp0) out["vP0"] = rational_to_json(*data.vp0);
    return out;
}

}  // namespace signrep::io
