#pragma once

/*
 * JSON and CSV serialization of classes, quantum products, and product
 * tables.
 *
 * Schema: a class is a list of {theta, eta, num, den} with den > 0 and
 * num/den in lowest terms; a quantum class is a sparse list of
 * {qpow, terms} entries (known-zero orders omitted) where an open
 * coefficient appears as {qpow, unknown: true}, never as 0.  A table
 * document carries format_version "1", the ambient parameters, the
 * truncation order, and one row per (u, v).  CSV rows carry the canonical
 * text rendering; JSON is the round-trip format.
 */

#include "symq/ambient.hpp"
#include "symq/quantum.hpp"
#include "symq/rational.hpp"
#include "symq/render.hpp"
#include "symq/ring.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symq {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTableFormatVersion = "1";

// Terms of a class as a JSON array, in the canonical rendering order
// (degree ascending, theta-exponent descending).
inline Json json_terms(const CohClass& x) {
    std::vector<std::pair<Monomial, Rational>> terms(x.terms().begin(),
                                                     x.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& lhs, const auto& rhs) {
                  const long dl = lhs.first.degree();
                  const long dr = rhs.first.degree();
                  if (dl != dr)
                      return dl < dr;
                  return lhs.first.a > rhs.first.a;
              });
    Json out = Json::array();
    for (const auto& [mono, coeff] : terms) {
        Json term;
        term["theta"] = mono.a;
        term["eta"] = mono.b;
        term["num"] = to_int64(boost::multiprecision::numerator(coeff));
        term["den"] = to_int64(boost::multiprecision::denominator(coeff));
        out.push_back(std::move(term));
    }
    return out;
}

inline CohClass class_from_terms_json(const Json& j, const Ambient& amb) {
    if (!j.is_array())
        throw std::invalid_argument("class terms: expected a JSON array");
    CohClass out(amb);
    for (const auto& term : j) {
        const long den = term.at("den").get<long>();
        if (den <= 0)
            throw std::invalid_argument("class terms: denominator must be > 0");
        out.add_term(term.at("theta").get<long>(), term.at("eta").get<long>(),
                     Rational(Int(term.at("num").get<long>()), Int(den)));
    }
    return out;
}

// Sparse order list of a quantum class: known-zero orders are omitted,
// open orders appear as explicit unknown markers.
inline Json json_orders(const QClass& x) {
    Json out = Json::array();
    for (long e = 0; e <= x.truncation_order(); ++e) {
        if (!x.known(e)) {
            Json entry;
            entry["qpow"] = e;
            entry["unknown"] = true;
            out.push_back(std::move(entry));
            continue;
        }
        if (x.order(e).empty())
            continue;
        Json entry;
        entry["qpow"] = e;
        entry["terms"] = json_terms(x.order(e));
        out.push_back(std::move(entry));
    }
    return out;
}

inline QClass qclass_from_orders_json(const Json& j, const Ambient& amb,
                                      long trunc) {
    if (!j.is_array())
        throw std::invalid_argument("qclass orders: expected a JSON array");
    QClass out(amb, trunc);
    for (const auto& entry : j) {
        const long e = entry.at("qpow").get<long>();
        if (entry.contains("unknown") && entry["unknown"].get<bool>())
            out.set_unknown(e);
        else
            out.set_order(e, class_from_terms_json(entry.at("terms"), amb));
    }
    return out;
}

// Standalone document for one product eta^u * eta^v.
inline Json product_json(const QClass& x, long u, long v) {
    Json out;
    out["g"] = x.ambient().g;
    out["d"] = x.ambient().d;
    out["u"] = u;
    out["v"] = v;
    out["qmax"] = x.truncation_order();
    out["orders"] = json_orders(x);
    return out;
}

struct TableRow {
    long u = 0;
    long v = 0;
    QClass product;

    friend bool operator==(const TableRow& x, const TableRow& y) {
        return x.u == y.u && x.v == y.v && x.product == y.product;
    }
    friend bool operator!=(const TableRow& x, const TableRow& y) {
        return !(x == y);
    }
};

struct TableDocument {
    Ambient amb;
    long qmax = 1;
    std::vector<TableRow> rows;

    friend bool operator==(const TableDocument& x, const TableDocument& y) {
        return x.amb == y.amb && x.qmax == y.qmax && x.rows == y.rows;
    }
    friend bool operator!=(const TableDocument& x, const TableDocument& y) {
        return !(x == y);
    }
};

// All products eta^u * eta^v with u, v >= 1 and u+v <= max_total, rows
// ordered by (u, v).
inline TableDocument build_table(const Ambient& amb, long max_total,
                                 long qmax) {
    TableDocument doc{amb, qmax, {}};
    for (long u = 1; u <= max_total - 1; ++u)
        for (long v = 1; u + v <= max_total; ++v)
            doc.rows.push_back(TableRow{u, v, qprod_eta(u, v, amb, qmax)});
    return doc;
}

inline Json table_to_json(const TableDocument& doc) {
    Json out;
    out["format_version"] = kTableFormatVersion;
    out["g"] = doc.amb.g;
    out["d"] = doc.amb.d;
    out["qmax"] = doc.qmax;
    Json rows = Json::array();
    for (const auto& row : doc.rows) {
        Json r;
        r["u"] = row.u;
        r["v"] = row.v;
        r["orders"] = json_orders(row.product);
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out;
}

inline TableDocument table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("format_version"))
        throw std::invalid_argument("table: missing format_version");
    if (j["format_version"].get<std::string>() != kTableFormatVersion)
        throw std::invalid_argument("table: unsupported format_version");
    const Ambient amb(j.at("g").get<long>(), j.at("d").get<long>());
    const long qmax = j.at("qmax").get<long>();
    TableDocument doc{amb, qmax, {}};
    for (const auto& r : j.at("rows"))
        doc.rows.push_back(TableRow{
            r.at("u").get<long>(), r.at("v").get<long>(),
            qclass_from_orders_json(r.at("orders"), amb, qmax)});
    return doc;
}

// CSV with a header row; product cells carry the canonical text rendering
// (no commas, so no quoting is needed).
inline std::string table_to_csv(const TableDocument& doc) {
    std::string out = "u,v,product\n";
    for (const auto& row : doc.rows) {
        out += std::to_string(row.u);
        out += ',';
        out += std::to_string(row.v);
        out += ',';
        out += render_qclass(row.product);
        out += '\n';
    }
    return out;
}

} // namespace symq
