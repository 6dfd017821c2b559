#include <doctest.h>

#include <sstream>

#include "sdc/cli.hpp"

using namespace sdc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify prints the summary") {
    const auto r = run({"verify", "--construction", "20.1", "--alphabet", "f4", "--v", "31223333300320201200"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("self-dual [80,40,14] Type I, W80 α=-275 β=0\n", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"verify", "--construction", "20.1", "--alphabet", "f4", "--v", "3122"}).code == kExitUsage);
    CHECK(run({"verify", "--construction", "20.9", "--alphabet", "f4", "--v", "3122"}).code == kExitUsage);
    CHECK(run({"verify", "--construction", "20.1", "--alphabet", "f5", "--v", "3122"}).code == kExitUsage);
    CHECK(run({"census", "--construction", "20.1", "--alphabet", "f4", "--v", "31223333300320201200",
               "--max-weight", "20"})
              .code == kExitUsage);
    CHECK(run({"search", "--construction", "20.1", "--alphabet", "f4", "--target-d", "14", "--trials", "1"}).code ==
          kExitUsage);
    CHECK(run({"tables", "--table", "15"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("failed verification exits with 1") {
    const auto r = run({"verify", "--construction", "20.1", "--alphabet", "f4", "--v", "31223333300320201201"});
    CHECK(r.code == kExitVerificationFailure);
}

TEST_CASE("help exits with 0") { CHECK(run({"--help"}).code == kExitOk); }

TEST_CASE("search with no trials") {
    const auto r = run({"search", "--construction", "20.2", "--alphabet", "f2", "--target-d", "8", "--trials", "0",
                        "--seed", "1", "--out-dir", ""});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("0 discoveries") != std::string::npos);
}

TEST_CASE("census and params on a 20.2 code") {
    const std::vector<std::string> src = {"--construction", "20.2", "--alphabet", "f2u", "--v", "12222331200322021203"};
    auto args = std::vector<std::string>{"census"};
    args.insert(args.end(), src.begin(), src.end());
    args.insert(args.end(), {"--max-weight", "14"});
    const auto c = run(args);
    CHECK(c.code == kExitOk);
    // alpha = -280: A_14 = 3200 + 4 alpha
    CHECK(c.out.find("A_14 = 2080") != std::string::npos);

    args = {"params"};
    args.insert(args.end(), src.begin(), src.end());
    const auto p = run(args);
    CHECK(p.code == kExitOk);
    CHECK(p.out == "W80 α=-280 β=0\n");
}

TEST_CASE("tables report") {
    const auto r = run({"tables", "--table", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("table 3: 4/4 rows pass") != std::string::npos);
}
