#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qverify/cli.hpp"
#include "qverify/report.hpp"

using namespace qverify;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "qverify");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) {
        v.push_back(l);
    }
    return v;
}

} // namespace

TEST_CASE("expand")
{
    Run l = run({"expand", "lhs", "c1", "--m", "0", "--order", "7"});
    CHECK(l.code == 0);
    CHECK(l.out == "0:1 1:1 2:1 3:1 4:2 5:2 6:3\n");
    Run r = run({"expand", "rhs", "c1", "--m", "0", "--order", "7"});
    CHECK(r.out == l.out);
    CHECK(run({"expand", "lhs", "c1", "--m", "0", "--order", "0"}).out == "\n");
    CHECK(run({"expand", "middle", "c1"}).code == exit_usage);
    CHECK(run({"expand", "lhs", "c99"}).code == exit_usage);
    CHECK(run({"expand", "lhs", "cm1", "--m", "0"}).code == exit_usage);
}

TEST_CASE("list")
{
    Run t = run({"list"});
    CHECK(t.code == 0);
    CHECK(lines(t.out).size() == 43);
    CHECK(lines(run({"list", "--ids", "cc*"}).out).size() == 8);

    Run j = run({"list", "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 43);
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
    CHECK(doc[0]["id"] == "t1ef");
    CHECK(doc[2]["m_domain"]["lo"] == 0);
    CHECK(doc[2]["m_domain"]["hi"].is_null());
}

TEST_CASE("verify exit codes")
{
    Run ok = run({"verify", "--ids", "c1", "--m-max", "2", "--format", "json"});
    CHECK(ok.code == exit_ok);
    auto recs = lines(ok.out);
    REQUIRE(recs.size() == 3);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        auto j = nlohmann::json::parse(recs[i]);
        CHECK(j["identity"] == "c1");
        CHECK(j["m"] == static_cast<long>(i));
        CHECK(j["pass"] == true);
        CHECK(j["first_mismatch"].is_null());
        CHECK(j.contains("elapsed_ms"));
    }

    CHECK(run({"verify", "--ids", "nope"}).code == exit_usage);
    CHECK(run({"verify", "--order", "0"}).code == exit_usage);
    CHECK(run({"verify", "--m-min", "3", "--m-max", "1"}).code == exit_usage);
    CHECK(run({"verify", "--bogus"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);

    Run bad = run({"verify", "--ids", "c1", "--m-max", "1", "--format", "json", "--inject-fault"});
    CHECK(bad.code == exit_mismatch);
    auto first = nlohmann::json::parse(lines(bad.out).at(0));
    CHECK(first["pass"] == false);
    CHECK(first["first_mismatch"]["exponent"].is_number_integer());
    CHECK(first["first_mismatch"]["lhs"].is_string());

    Run ff = run({"verify", "--ids", "c1,c2", "--inject-fault", "--fail-fast", "--jobs", "3"});
    CHECK(ff.code == exit_mismatch);
    CHECK(lines(ff.out).size() == 1);
}

TEST_CASE("parallel output is ordered")
{
    auto strip = [](const std::string &s) {
        std::vector<std::string> out;
        for (const auto &l : lines(s)) {
            auto j = nlohmann::json::parse(l);
            j.erase("elapsed_ms");
            out.push_back(j.dump());
        }
        return out;
    };
    Run one = run({"verify", "--ids", "c1,c2,A.*,cm1", "--format", "json", "--order", "30"});
    Run many = run({"verify", "--ids", "c1,c2,A.*,cm1", "--format", "json", "--order", "30", "--jobs", "6"});
    CHECK(one.code == 0);
    CHECK(many.code == 0);
    CHECK(strip(one.out) == strip(many.out));
    CHECK(strip(one.out).size() == 7 + 7 + 12 + 6);
}

TEST_CASE("report file and record round trip")
{
    const std::string path = "qverify_test_report.jsonl";
    Run r = run({"verify", "--ids", "A.8", "--format", "json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    VerificationReport rep = report_from_json(nlohmann::json::parse(line));
    CHECK(rep.identity == "A.8");
    CHECK(rep.pass);
    std::remove(path.c_str());

    VerificationReport f;
    f.identity = "x";
    f.m = 3;
    f.order = 9;
    f.first_mismatch = Mismatch{-2, Rational(1, 2), Rational(-7, 3)};
    VerificationReport back = report_from_json(report_to_json(f));
    REQUIRE(back.first_mismatch);
    CHECK(back.first_mismatch->exponent == -2);
    CHECK(back.first_mismatch->lhs == Rational(1, 2));
    CHECK(back.first_mismatch->rhs == Rational(-7, 3));
    CHECK(report_to_json(f)["first_mismatch"]["rhs"] == "-7/3");
}
