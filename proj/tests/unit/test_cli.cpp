#include "doctest.h"

#include "regpart/cli/app.hpp"
#include "regpart/cli/json_io.hpp"
#include "regpart/cli/verify.hpp"

#include <sstream>

using namespace regpart;
using namespace regpart::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json data_of(const Result& r) { return json::parse(r.out).at("data"); }

template <typename T>
void round_trip(const T& value)
{
    const json j = value;
    CHECK(j.get<T>() == value);
    CHECK(json::parse(j.dump()).get<T>() == value);
}

} // namespace

TEST_CASE("statistic lookups")
{
    auto r = invoke({"stats", "V", "--moduli", "2,3", "--n", "10", "--j", "1", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "18\n");
    r = invoke({"stats", "V", "--moduli", "2,3", "--n", "10", "--j", "1"});
    CHECK(data_of(r).at("values").at("1") == "18");
    r = invoke({"stats", "W", "--moduli", "2,3", "--n", "10", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("statistic,moduli,n,j,value\nW,\"(2,3)\",10,1,6\n", 0) == 0);
    r = invoke({"stats", "X", "--r", "3", "--n", "7", "--j", "2", "--format", "text"});
    CHECK(r.out == "10\n");
    r = invoke({"stats", "c", "--moduli", "3", "--n", "7", "--format", "text"});
    CHECK(r.out == "6\n");
}

TEST_CASE("enumeration output")
{
    auto r = invoke({"enumerate", "cp", "--moduli", "2,3", "--n", "0"});
    CHECK(r.code == 0);
    CHECK(data_of(r) == json::parse("[[]]"));
    r = invoke({"enumerate", "rp", "--moduli", "2", "--n", "4"});
    CHECK(data_of(r) == json::parse("[[4],[3,1]]"));
    const auto meta = json::parse(r.out).at("meta");
    CHECK(meta.at("command") == "enumerate rp");
    CHECK(meta.at("params").at("n") == 4);
}

TEST_CASE("other commands")
{
    auto r = invoke({"series", "c", "--moduli", "3", "--degree", "10"});
    CHECK(r.code == 0);
    CHECK(data_of(r).at("coefficients").at(10) == "19");
    r = invoke({"glaisher", "forward", "--moduli", "3", "--lambda", "9"});
    CHECK(data_of(r).at("steps") == 4);
    r = invoke({"glaisher", "gstats", "--moduli", "3", "--lambda", "1,1,1,1,1,1,1,1,1", "--format", "text"});
    CHECK(r.out == "G_1 3\nG_2 1\nG 4\n");
    r = invoke({"kostka", "--lambda", "3,1", "--mu", "2,1,1", "--format", "text"});
    CHECK(r.out == "t + t^2\n");
    r = invoke({"hl", "qprime", "--lambda", "1,1", "--r", "2"});
    CHECK(r.code == 0);
    const auto f = data_of(r).get<SymFunc<CyclotomicNumber>>();
    SymFunc<CyclotomicNumber> expected(2);
    expected.add_term(Partition{2}, CyclotomicNumber(2, Rational(-1)));
    CHECK(f == expected);
    r = invoke({"chartable", "regular", "--r", "2", "--n", "4"});
    CHECK(data_of(r).at("determinant") == "3");
}

TEST_CASE("verification exit codes")
{
    auto r = invoke({"verify", "thm41", "--r", "3", "--max-n", "20"});
    CHECK(r.code == 0);
    const auto report = data_of(r).get<VerifyReport>();
    CHECK(report.passed);
    CHECK(report.checked == 2 * 21);
    for (const auto& name : suite_names()) {
        const auto small = invoke({"verify", name, "--max-n", "4", "--moduli", "2,3", "--r", "2"});
        CHECK_MESSAGE(small.code == 0, name);
    }
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"stats", "V", "--moduli", "4,6", "--n", "3"}).code == 2);
    CHECK(invoke({"stats", "Z", "--n", "3"}).code == 2);
    CHECK(invoke({"enumerate", "cp", "--moduli", "2,3"}).code == 2);
    CHECK(invoke({"enumerate", "cp", "--moduli", "2,3", "--n", "31"}).code == 2);
    CHECK(invoke({"enumerate", "cp", "--moduli", "2,3", "--n", "31", "--limit-n", "31"}).code == 0);
    CHECK(invoke({"chartable", "full", "--n", "9"}).code == 2);
    CHECK(invoke({"glaisher", "forward", "--moduli", "3", "--lambda", "1,1,1"}).code == 2);
    CHECK(invoke({"series", "phi", "--format", "csv"}).code == 2);
    CHECK(invoke({"stats", "V", "--moduli", "2,x", "--n", "3"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes")
{
    const std::vector<std::string> args = {"verify", "thm49", "--r", "3", "--max-n", "4"};
    CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("JSON round trips")
{
    round_trip(Partition{3, 1, 1});
    round_trip(Partition{});
    round_trip(ModulusTuple{2, 3, 5});
    round_trip(QPoly({Rational(1, 2), 0, -3}));
    round_trip(CyclotomicNumber::zeta(5, 3) + Rational(2, 7));
    round_trip(phi(ModulusTuple{2, 3}, 20));
    round_trip(glaisher_forward(Partition{9, 3, 1}, ModulusTuple{3}));
    round_trip(table_V(ModulusTuple{2, 3}, 10));
    round_trip(table_Y(3, 7));
    round_trip(regular_character_table(3, 6));
    round_trip(hl_Qprime(Partition{2, 1, 1}));
    round_trip(specialize_t(hl_P(Partition{3, 1}), 3));
    round_trip(run_suite("thm22", VerifyParams{}));
    Integer big("123456789012345678901234567890");
    round_trip(big);
    round_trip(make_rational(big, Integer(11)));
}
