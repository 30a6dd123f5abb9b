#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

// Runs the CLI named by ROLLCALL_CLI; returns {exit code, stdout}.
std::pair<int, std::string> run(const std::string& args) {
    const char* bin = std::getenv("ROLLCALL_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "ROLLCALL_CLI not set");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gen is deterministic and solve exit codes track decisions") {
    auto [g1, doc1] = run("gen --rule plurality --m 2 --past 0 --future 1 --seed 5");
    auto [g2, doc2] = run("gen --rule plurality --m 2 --past 0 --future 1 --seed 5");
    CHECK(g1 == 0);
    CHECK(doc1 == doc2);

    auto [g3, doc3] = run("gen --rule plurality --m 2 --past 0 --future 1 --seed 6");
    CHECK(g3 == 0);
    CHECK(doc1 != doc3);
}

TEST_CASE("solve pipeline through reduce partition") {
    auto [e1, out1] = run("reduce partition --values 2,1,1 --out /tmp/rollcall_t7.json");
    CHECK(e1 == 0);
    auto [yes, rep] = run("solve /tmp/rollcall_t7.json");
    CHECK(yes == 0);
    CHECK(rep.find("\"decision\": true") != std::string::npos);

    auto [e2, out2] = run("reduce partition --values 3,1 --out /tmp/rollcall_t8.json");
    CHECK(e2 == 0);
    CHECK(run("solve /tmp/rollcall_t8.json").first == 1);
    CHECK(run("fast /tmp/rollcall_t8.json").first == 1);
    CHECK(run("oracle /tmp/rollcall_t8.json").first == 1);
    (void)out1;
    (void)out2;
}

TEST_CASE("bad input exits 2") {
    CHECK(run("solve /definitely/not/a/file").first == 2);
    CHECK(run("classify --alpha 0,1").first == 2);
}

TEST_CASE("check agrees across engines") {
    auto [e1, _] = run("gen --rule approval --m 2 --past 1 --future 2 --weighted "
                       "--seed 11 --out /tmp/rollcall_t9.json");
    CHECK(e1 == 0);
    auto [ok, rep] = run("check /tmp/rollcall_t9.json /tmp/rollcall_t7.json");
    CHECK(ok == 0);
    CHECK(rep.find("\"all_agree\": true") != std::string::npos);
}

TEST_SUITE_END();
