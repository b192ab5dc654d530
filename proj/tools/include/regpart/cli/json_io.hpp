#pragma once

#include "regpart/chartable.hpp"
#include "regpart/cyclotomic.hpp"
#include "regpart/glaisher.hpp"
#include "regpart/partition.hpp"
#include "regpart/qpoly.hpp"
#include "regpart/series.hpp"
#include "regpart/statistics.hpp"
#include "regpart/symfunc.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

// Serialization conventions: integers and rationals are decimal strings so
// that big values survive any JSON reader; partitions are decreasing integer
// arrays; polynomials in t are coefficient arrays, constant term first;
// cyclotomic numbers are {"order", "coefficients"}.

namespace regpart::cli {

using nlohmann::json;

/// Outcome of one verification suite.
struct VerifyReport {
    std::string suite;
    json params = json::object();
    long long checked = 0;
    bool passed = true;
    std::optional<std::string> counterexample;
    json rows = json::array();

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// The {"meta": {...}, "data": ...} envelope.
json envelope(const std::string& command, const json& params, const json& data);

} // namespace regpart::cli

namespace nlohmann {

template <>
struct adl_serializer<regpart::Integer> {
    static void to_json(json& j, const regpart::Integer& x);
    static void from_json(const json& j, regpart::Integer& x);
};

template <>
struct adl_serializer<regpart::Rational> {
    static void to_json(json& j, const regpart::Rational& x);
    static void from_json(const json& j, regpart::Rational& x);
};

template <>
struct adl_serializer<regpart::Partition> {
    static void to_json(json& j, const regpart::Partition& p);
    static regpart::Partition from_json(const json& j);
};

template <>
struct adl_serializer<regpart::ModulusTuple> {
    static void to_json(json& j, const regpart::ModulusTuple& m);
    static regpart::ModulusTuple from_json(const json& j);
};

template <>
struct adl_serializer<regpart::QPoly> {
    static void to_json(json& j, const regpart::QPoly& p);
    static regpart::QPoly from_json(const json& j);
};

template <>
struct adl_serializer<regpart::CyclotomicNumber> {
    static void to_json(json& j, const regpart::CyclotomicNumber& x);
    static regpart::CyclotomicNumber from_json(const json& j);
};

template <>
struct adl_serializer<regpart::TruncatedSeries> {
    static void to_json(json& j, const regpart::TruncatedSeries& s);
    static regpart::TruncatedSeries from_json(const json& j);
};

template <>
struct adl_serializer<regpart::GlaisherTrace> {
    static void to_json(json& j, const regpart::GlaisherTrace& t);
    static regpart::GlaisherTrace from_json(const json& j);
};

template <>
struct adl_serializer<regpart::StatisticTable> {
    static void to_json(json& j, const regpart::StatisticTable& t);
    static regpart::StatisticTable from_json(const json& j);
};

template <>
struct adl_serializer<regpart::CharacterTable> {
    static void to_json(json& j, const regpart::CharacterTable& t);
    static regpart::CharacterTable from_json(const json& j);
};

template <typename Coeff>
struct adl_serializer<regpart::SymFunc<Coeff>> {
    static void to_json(json& j, const regpart::SymFunc<Coeff>& f)
    {
        json terms = json::array();
        for (const auto& [rho, c] : f.terms()) {
            terms.push_back({{"rho", rho}, {"coefficient", c}});
        }
        j = {{"degree", f.degree()}, {"basis", "p"}, {"terms", terms}};
    }
    static regpart::SymFunc<Coeff> from_json(const json& j)
    {
        regpart::SymFunc<Coeff> f(j.at("degree").get<int>());
        for (const auto& term : j.at("terms")) {
            f.add_term(term.at("rho").get<regpart::Partition>(), term.at("coefficient").get<Coeff>());
        }
        return f;
    }
};

template <>
struct adl_serializer<regpart::cli::VerifyReport> {
    static void to_json(json& j, const regpart::cli::VerifyReport& r);
    static regpart::cli::VerifyReport from_json(const json& j);
};

} // namespace nlohmann
