#include "k1witt/serialize.hpp"

#include <stdexcept>

namespace k1witt {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument(what);
}

std::int64_t expect_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) malformed(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

int expect_bit(const Json& j, const char* what) {
    const std::int64_t v = expect_int(j, what);
    if (v != 0 && v != 1) malformed(std::string(what) + ": expected 0 or 1");
    return static_cast<int>(v);
}

BigInt bigint_from_string(const std::string& s) {
    if (s.empty()) malformed("empty integer literal");
    std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (i == s.size()) malformed("bare sign is not an integer");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            malformed("bad digit in integer literal: \"" + s + "\"");
        }
    }
    return BigInt(s);
}

} // namespace

Json gram_to_json(const GramForm& f) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.dim(); ++j) {
            row.push_back(f.matrix().at(i, j).value());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

GramForm gram_from_json(const Json& j, Prime ell) {
    if (!j.is_array()) malformed("gram: expected an array of arrays");
    const std::size_t n = j.size();
    FpMatrix m(n, n, ell);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) {
            malformed("gram: row " + std::to_string(i) + " has wrong length");
        }
        for (std::size_t k = 0; k < n; ++k) {
            m.set(i, k, Residue(expect_int(j[i][k], "gram entry"), ell));
        }
    }
    return GramForm(std::move(m));
}

Json gwclass_to_json(GWClass c) {
    Json out;
    out["rank"] = c.rank;
    out["e"] = c.e;
    return out;
}

GWClass gwclass_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("e")) {
        malformed("class: expected {\"rank\":…,\"e\":…}");
    }
    return GWClass{expect_int(j["rank"], "rank"), expect_bit(j["e"], "e")};
}

Json group_to_json(const FiniteGroup& g) {
    Json table = Json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    Json out;
    out["order"] = g.order();
    out["table"] = std::move(table);
    return out;
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object()) malformed("group: expected an object");
    if (j.contains("cyclic")) {
        const std::int64_t n = expect_int(j["cyclic"], "cyclic order");
        if (n < 1) malformed("cyclic order must be positive");
        return FiniteGroup::cyclic(static_cast<std::size_t>(n));
    }
    if (j.contains("product")) {
        const Json& factors = j["product"];
        if (!factors.is_array() || factors.size() != 2) {
            malformed("product: expected exactly two factors");
        }
        return FiniteGroup::product(group_from_json(factors[0]),
                                    group_from_json(factors[1]));
    }
    if (j.contains("table")) {
        const Json& t = j["table"];
        if (!t.is_array()) malformed("table: expected an array of arrays");
        std::vector<std::vector<std::size_t>> table;
        table.reserve(t.size());
        for (const Json& row : t) {
            if (!row.is_array()) malformed("table row: expected an array");
            std::vector<std::size_t> r;
            r.reserve(row.size());
            for (const Json& v : row) {
                const std::int64_t e = expect_int(v, "table entry");
                if (e < 0) malformed("table entry must be nonnegative");
                r.push_back(static_cast<std::size_t>(e));
            }
            table.push_back(std::move(r));
        }
        if (j.contains("order") &&
            expect_int(j["order"], "order") !=
                static_cast<std::int64_t>(table.size())) {
            malformed("declared order disagrees with the table size");
        }
        return FiniteGroup(std::move(table));
    }
    malformed("group: expected \"cyclic\", \"product\" or \"table\"");
}

Representation rep_from_json(const Json& j, const FiniteGroup& g, Prime ell) {
    if (!j.is_array() || j.size() != g.order()) {
        malformed("rep: expected one matrix per group element");
    }
    std::vector<FpMatrix> mats;
    mats.reserve(g.order());
    for (const Json& mj : j) {
        if (!mj.is_array()) malformed("rep matrix: expected an array of arrays");
        const std::size_t n = mj.size();
        FpMatrix m(n, n, ell);
        for (std::size_t r = 0; r < n; ++r) {
            if (!mj[r].is_array() || mj[r].size() != n) {
                malformed("rep matrix: row has wrong length");
            }
            for (std::size_t c = 0; c < n; ++c) {
                m.set(r, c, Residue(expect_int(mj[r][c], "rep entry"), ell));
            }
        }
        mats.push_back(std::move(m));
    }
    return Representation(g, std::move(mats));
}

Json padic_to_json(const PadicInt& x) {
    Json out;
    out["p"] = x.prime();
    out["residue"] = x.residue().str();
    out["precision"] = x.precision();
    return out;
}

PadicInt padic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("residue") ||
        !j.contains("precision")) {
        malformed("padic: expected {\"p\":…,\"residue\":…,\"precision\":…}");
    }
    const std::int64_t p = expect_int(j["p"], "p");
    const std::int64_t prec = expect_int(j["precision"], "precision");
    if (p < 2 || prec < 1) malformed("padic: bad p or precision");
    BigInt residue;
    if (j["residue"].is_string()) {
        residue = bigint_from_string(j["residue"].get<std::string>());
    } else {
        residue = expect_int(j["residue"], "residue");
    }
    return PadicInt(static_cast<std::uint32_t>(p), residue,
                    static_cast<unsigned>(prec));
}

Json k1_to_json(const K1Element& x) {
    Json out;
    out["a"] = x.a().balanced().str();
    out["d"] = x.d();
    return out;
}

Json sphere_to_json(const SphereElement& x) {
    if (x.at_two()) return k1_to_json(x.two_part());
    return padic_to_json(x.odd_part());
}

SphereElement sphere_from_string(const std::string& text, std::uint32_t p,
                                 unsigned precision) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') s.push_back(c);
    }
    if (s.empty()) malformed("empty element");

    bool has_eps = false;
    // Strip a trailing "+e" / "-e"; "-e" still means +e since 2e = 0.
    if (s.size() >= 2 && (s[s.size() - 2] == '+' || s[s.size() - 2] == '-') &&
        s.back() == 'e') {
        has_eps = true;
        s.resize(s.size() - 2);
    } else if (s == "e") {
        has_eps = true;
        s.clear();
    }
    const BigInt a = s.empty() ? BigInt(0) : bigint_from_string(s);
    if (has_eps && p != 2) {
        malformed("eps-component only exists at p = 2");
    }
    if (p == 2) {
        return SphereElement(K1Element(PadicInt(2, a, precision), has_eps));
    }
    return SphereElement(PadicInt(p, a, precision));
}

SphereElement sphere_from_json(const Json& j, std::uint32_t p,
                               unsigned precision) {
    if (j.is_string()) {
        return sphere_from_string(j.get<std::string>(), p, precision);
    }
    if (j.is_number_integer()) {
        return SphereElement::integer(p, j.get<std::int64_t>(), precision);
    }
    if (j.is_object() && j.contains("a")) {
        const Json& a = j["a"];
        PadicInt value = a.is_object()
                             ? padic_from_json(a)
                             : (a.is_string()
                                    ? PadicInt(p, bigint_from_string(
                                                      a.get<std::string>()),
                                               precision)
                                    : PadicInt(p, expect_int(a, "a"), precision));
        const int d = j.contains("d") ? expect_bit(j["d"], "d") : 0;
        if (value.prime() != p) malformed("element prime disagrees with --p");
        if (p == 2) return SphereElement(K1Element(std::move(value), d));
        if (d != 0) malformed("eps-component only exists at p = 2");
        return SphereElement(std::move(value));
    }
    if (j.is_object() && j.contains("residue")) {
        PadicInt value = padic_from_json(j);
        if (value.prime() != p) malformed("element prime disagrees with --p");
        if (p == 2) return SphereElement(K1Element(std::move(value), 0));
        return SphereElement(std::move(value));
    }
    malformed("element: expected a string, integer or {\"a\":…,\"d\":…}");
}

PiFiniteSpace space_from_json(const Json& j, std::uint32_t p) {
    if (!j.is_object() || !j.contains("components")) {
        malformed("space: expected {\"components\": [[…],…]}");
    }
    if (j.contains("p") &&
        expect_int(j["p"], "p") != static_cast<std::int64_t>(p)) {
        malformed("space prime disagrees with --p");
    }
    const Json& comps = j["components"];
    if (!comps.is_array()) malformed("components: expected an array");
    std::vector<std::vector<std::uint64_t>> components;
    components.reserve(comps.size());
    for (const Json& comp : comps) {
        if (!comp.is_array()) malformed("component: expected an array of orders");
        std::vector<std::uint64_t> orders;
        orders.reserve(comp.size());
        for (const Json& o : comp) {
            const std::int64_t v = expect_int(o, "order");
            if (v < 1) malformed("order must be positive");
            orders.push_back(static_cast<std::uint64_t>(v));
        }
        components.push_back(std::move(orders));
    }
    return PiFiniteSpace(p, std::move(components));
}

Json space_to_json(const PiFiniteSpace& s) {
    Json out;
    out["p"] = s.prime();
    out["components"] = s.components();
    return out;
}

} // namespace k1witt
