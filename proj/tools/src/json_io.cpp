#include "regpart/cli/json_io.hpp"

#include <stdexcept>

namespace regpart::cli {

json envelope(const std::string& command, const json& params, const json& data)
{
    return {{"meta", {{"command", command}, {"params", params}}}, {"data", data}};
}

} // namespace regpart::cli

namespace nlohmann {

using regpart::Integer;
using regpart::Rational;

void adl_serializer<Integer>::to_json(json& j, const Integer& x) { j = x.get_str(); }

void adl_serializer<Integer>::from_json(const json& j, Integer& x)
{
    if (j.is_number_integer()) {
        x = Integer(std::to_string(j.get<long long>()));
        return;
    }
    if (x.set_str(j.get<std::string>(), 10) != 0) {
        throw std::invalid_argument("malformed integer: " + j.dump());
    }
}

void adl_serializer<Rational>::to_json(json& j, const Rational& x) { j = x.get_str(); }

void adl_serializer<Rational>::from_json(const json& j, Rational& x)
{
    x = j.is_number_integer() ? Rational(std::to_string(j.get<long long>())) : regpart::parse_rational(j.get<std::string>());
}

void adl_serializer<regpart::Partition>::to_json(json& j, const regpart::Partition& p) { j = p.parts(); }

regpart::Partition adl_serializer<regpart::Partition>::from_json(const json& j)
{
    return regpart::Partition(j.get<std::vector<int>>());
}

void adl_serializer<regpart::ModulusTuple>::to_json(json& j, const regpart::ModulusTuple& m) { j = m.moduli(); }

regpart::ModulusTuple adl_serializer<regpart::ModulusTuple>::from_json(const json& j)
{
    return regpart::ModulusTuple(j.get<std::vector<int>>());
}

void adl_serializer<regpart::QPoly>::to_json(json& j, const regpart::QPoly& p) { j = p.coeffs(); }

regpart::QPoly adl_serializer<regpart::QPoly>::from_json(const json& j)
{
    return regpart::QPoly(j.get<std::vector<Rational>>());
}

void adl_serializer<regpart::CyclotomicNumber>::to_json(json& j, const regpart::CyclotomicNumber& x)
{
    j = {{"order", x.order()}, {"coefficients", x.coefficients()}};
}

regpart::CyclotomicNumber adl_serializer<regpart::CyclotomicNumber>::from_json(const json& j)
{
    return regpart::CyclotomicNumber(j.at("order").get<int>(),
                                     regpart::QPoly(j.at("coefficients").get<std::vector<Rational>>()));
}

void adl_serializer<regpart::TruncatedSeries>::to_json(json& j, const regpart::TruncatedSeries& s)
{
    j = {{"degree", s.degree()}, {"coefficients", s.coeffs()}};
}

regpart::TruncatedSeries adl_serializer<regpart::TruncatedSeries>::from_json(const json& j)
{
    return regpart::TruncatedSeries(j.at("degree").get<int>(), j.at("coefficients").get<std::vector<Rational>>());
}

void adl_serializer<regpart::GlaisherTrace>::to_json(json& j, const regpart::GlaisherTrace& t)
{
    json g = json::object();
    for (const auto& [k, v] : t.g_by_j) {
        g[std::to_string(k)] = v;
    }
    j = {{"input", t.input}, {"output", t.output}, {"steps", t.steps}, {"g_by_j", g}};
}

regpart::GlaisherTrace adl_serializer<regpart::GlaisherTrace>::from_json(const json& j)
{
    regpart::GlaisherTrace t;
    t.input = j.at("input").get<regpart::Partition>();
    t.output = j.at("output").get<regpart::Partition>();
    t.steps = j.at("steps").get<long long>();
    for (const auto& [k, v] : j.at("g_by_j").items()) {
        t.g_by_j[std::stoi(k)] = v.get<long long>();
    }
    return t;
}

void adl_serializer<regpart::StatisticTable>::to_json(json& j, const regpart::StatisticTable& t)
{
    json values = json::object();
    for (const auto& [k, v] : t.values) {
        values[std::to_string(k)] = v;
    }
    j = {{"statistic", regpart::to_string(t.statistic)}, {"moduli", t.moduli}, {"n", t.n}, {"values", values}};
}

regpart::StatisticTable adl_serializer<regpart::StatisticTable>::from_json(const json& j)
{
    regpart::StatisticTable t{j.at("moduli").get<regpart::ModulusTuple>(), j.at("n").get<int>(),
                              regpart::Statistic::V, {}};
    const auto name = j.at("statistic").get<std::string>();
    const std::pair<const char*, regpart::Statistic> names[] = {{"V", regpart::Statistic::V},
                                                                {"W", regpart::Statistic::W},
                                                                {"X", regpart::Statistic::X},
                                                                {"Y", regpart::Statistic::Y}};
    bool known = false;
    for (const auto& [label, s] : names) {
        if (name == label) {
            t.statistic = s;
            known = true;
        }
    }
    if (!known) {
        throw std::invalid_argument("unknown statistic: " + name);
    }
    for (const auto& [k, v] : j.at("values").items()) {
        t.values[std::stoi(k)] = v.get<Integer>();
    }
    return t;
}

void adl_serializer<regpart::CharacterTable>::to_json(json& j, const regpart::CharacterTable& t)
{
    json rows = json::array();
    for (std::size_t i = 0; i < t.entries.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < t.entries.cols(); ++k) {
            row.push_back(t.entries(i, k));
        }
        rows.push_back(row);
    }
    j = {{"n", t.n}, {"rows", t.rows}, {"cols", t.cols}, {"entries", rows}};
}

regpart::CharacterTable adl_serializer<regpart::CharacterTable>::from_json(const json& j)
{
    regpart::CharacterTable t;
    t.n = j.at("n").get<int>();
    for (const auto& p : j.at("rows")) {
        t.rows.push_back(p.get<regpart::Partition>());
    }
    for (const auto& p : j.at("cols")) {
        t.cols.push_back(p.get<regpart::Partition>());
    }
    t.entries = regpart::Matrix<Integer>(t.rows.size(), t.cols.size(), Integer(0));
    const auto& rows = j.at("entries");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t k = 0; k < t.cols.size(); ++k) {
            t.entries(i, k) = rows.at(i).at(k).get<Integer>();
        }
    }
    return t;
}

void adl_serializer<regpart::cli::VerifyReport>::to_json(json& j, const regpart::cli::VerifyReport& r)
{
    j = {{"suite", r.suite}, {"params", r.params}, {"checked", r.checked}, {"passed", r.passed},
         {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}, {"rows", r.rows}};
}

regpart::cli::VerifyReport adl_serializer<regpart::cli::VerifyReport>::from_json(const json& j)
{
    regpart::cli::VerifyReport r;
    r.suite = j.at("suite").get<std::string>();
    r.params = j.at("params");
    r.checked = j.at("checked").get<long long>();
    r.passed = j.at("passed").get<bool>();
    if (!j.at("counterexample").is_null()) {
        r.counterexample = j.at("counterexample").get<std::string>();
    }
    r.rows = j.at("rows");
    return r;
}

} // namespace nlohmann
