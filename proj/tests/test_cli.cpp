#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace idring;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << s;
}

class Workspace {
public:
    Workspace() {
        static int counter = 0;
        dir_ = fs::temp_directory_path() / ("idring-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    fs::path path(const std::string& name) const { return dir_ / name; }

    Run run(const std::string& args) const {
        const std::string cmd = "cd '" + dir_.string() + "' && '" IDRING_CLI_PATH "' " + args + " > .stdout 2> .stderr";
        const int status = std::system(cmd.c_str());
        Run r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(path(".stdout"));
        r.err = slurp(path(".stderr"));
        return r;
    }

    // setup, three identities and a signature by b over "msg"
    void ring_world() const {
        REQUIRE(run("--seed 01 setup --params params --master master").code == 0);
        for (const char* id : {"a", "b", "c"})
            REQUIRE(run(std::string("extract --master master --id ") + id + " --out " + id + ".key").code == 0);
        spit(path("msg"), "pay 10 coins to dave\n");
        REQUIRE(run("--seed 02 sign --params params --ring a,b,c --signer b --key b.key --msg msg --out sig").code == 0);
    }

    void proxy_world() const {
        REQUIRE(run("--seed 03 setup --params params --master master").code == 0);
        for (const char* name : {"orig", "p1", "p2", "p3"})
            REQUIRE(run(std::string("keygen --params params --out ") + name).code == 0);
        spit(path("warrant"), "p1..p3 may sign invoices until 2027-01-01");
        spit(path("msg"), "invoice 42");
        REQUIRE(run("delegate --key orig --warrant warrant --out token").code == 0);
        REQUIRE(run("proxy-keygen --params params --token token --key p2 --original-pk orig.pub --out p2.proxy").code ==
                0);
        REQUIRE(run("proxy-sign --params params --original-pk orig.pub --proxy-pks p1.pub,p2.pub,p3.pub --key p2.proxy "
                    "--warrant warrant --msg msg --out psig")
                    .code == 0);
    }

private:
    fs::path dir_;
};

bool one_line(const std::string& s) { return !s.empty() && s.find('\n') == s.size() - 1; }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("setup, extract, sign and verify") {
        Workspace ws;
        ws.ring_world();
        const Run ok = ws.run("verify --params params --msg msg --sig sig");
        CHECK(ok.code == 0);
        CHECK(ok.out == "signature valid\n");
        CHECK(ws.run("verify --params params --msg msg --sig sig --ring a,b,c").code == 0);
        CHECK(ws.run("verify --params params --msg msg --sig sig --ring c,b,a").code == 1);

        spit(ws.path("other"), "pay 1000 coins to dave\n");
        const Run bad = ws.run("verify --params params --msg other --sig sig");
        CHECK(bad.code == 1);
        CHECK(bad.out == "signature invalid\n");
    }

    TEST_CASE("corrupting c_2 on disk gives exit 1") {
        Workspace ws;
        ws.ring_world();
        Bytes raw = from_hex(slurp(ws.path("sig")));
        // header, count, three one-byte identities, then the ring values
        const std::size_t c1 = 6 + 8 + 3 * 9;
        const std::size_t c2 = c1 + kTargetBytes;
        std::copy(raw.begin() + c1, raw.begin() + c2, raw.begin() + c2);
        spit(ws.path("sig"), to_hex(raw) + "\n");
        const Run r = ws.run("verify --params params --msg msg --sig sig");
        CHECK(r.code == 1);
        CHECK(r.out.find("signature invalid") != std::string::npos);
    }

    TEST_CASE("format and I/O errors give exit 2 with one diagnostic line") {
        Workspace ws;
        ws.ring_world();
        for (const char* args : {"verify --params params --msg msg --sig missing",
                                 "verify --params params --msg msg --sig params",
                                 "verify --params sig --msg msg --sig sig",
                                 "sign --params params --ring a,b,c --signer z --key b.key --msg msg",
                                 "sign --params params --ring a,b,c --signer a --key b.key --msg msg",
                                 "sign --params params --ring a,,c --signer a --key a.key --msg msg",
                                 "extract --master params --id x --out x.key"}) {
            CAPTURE(args);
            const Run r = ws.run(args);
            CHECK(r.code == 2);
            CHECK(one_line(r.err));
            CHECK(r.out.empty());
        }
        spit(ws.path("garbage"), "49445253zz");
        CHECK(ws.run("verify --params params --msg msg --sig garbage").code == 2);
        Bytes raw = from_hex(slurp(ws.path("sig")));
        raw.resize(raw.size() - 1);
        spit(ws.path("short"), to_hex(raw));
        CHECK(ws.run("verify --params params --msg msg --sig short").code == 2);
    }

    TEST_CASE("usage errors") {
        Workspace ws;
        for (const char* args : {"", "frobnicate", "verify --params p", "bench --max-n 0", "bench --max-n x",
                                 "setup --params a --master b bench"}) {
            CAPTURE(args);
            const Run r = ws.run(args);
            CHECK(r.code == 2);
            CHECK_FALSE(r.err.empty());
        }
        CHECK(ws.run("--help").code == 0);
    }

    TEST_CASE("bench reports 2n-1 and 2 pairings") {
        Workspace ws;
        const Run r = ws.run("bench --max-n 8 --csv");
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        std::getline(in, line);
        std::vector<std::string> sign;
        while (std::getline(in, line)) {
            std::vector<std::string> cells;
            std::stringstream ls(line);
            for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
            if (cells[1] != "idbrs") continue;
            if (cells[2] == "sign") sign.push_back(cells[3]);
            if (cells[2] == "verify") CHECK(cells[3] == "2");
        }
        CHECK(sign == std::vector<std::string>{"1", "3", "5", "7", "9", "11", "13", "15"});
        const Run text = ws.run("bench --max-n 2");
        CHECK(text.code == 0);
        CHECK(text.out.find("Zhang") != std::string::npos);
    }

    TEST_CASE("seeded signing is reproducible and unseeded is not") {
        Workspace ws;
        ws.ring_world();
        const std::string base = "sign --params params --ring a,b,c --signer a --key a.key --msg msg";
        const Run x = ws.run("--seed aa " + base), y = ws.run("--seed aa " + base);
        CHECK(x.code == 0);
        CHECK(x.out == y.out);
        CHECK_FALSE(ws.run(base).out == ws.run(base).out);
        spit(ws.path("stdout.sig"), x.out);
        CHECK(ws.run("verify --params params --msg msg --sig stdout.sig").code == 0);
    }

    TEST_CASE("secret material never reaches stdout") {
        Workspace ws;
        std::string all_out;
        auto run = [&](const std::string& args) {
            const Run r = ws.run(args);
            CHECK(r.code == 0);
            all_out += r.out;
        };
        run("setup --params params --master master");
        run("extract --master master --id alice --out alice.key");
        run("extract --master master --id bob --out bob.key");
        run("keygen --params params --out orig");
        run("keygen --params params --out prox");
        spit(ws.path("w"), "w");
        spit(ws.path("m"), "m");
        run("delegate --key orig --warrant w --out token");
        run("proxy-keygen --params params --token token --key prox --original-pk orig.pub --out prox.proxy");
        run("sign --params params --ring alice,bob --signer bob --key bob.key --msg m");
        run("proxy-sign --params params --original-pk orig.pub --proxy-pks prox.pub --key prox.proxy --warrant w --msg m");

        const auto master = decode_as<MasterKey>(dearmor(as_view(slurp(ws.path("master")))));
        const auto alice = decode_as<IdentitySecretKey>(dearmor(as_view(slurp(ws.path("alice.key")))));
        const auto orig = decode_as<LongTermKeyPair>(dearmor(as_view(slurp(ws.path("orig")))));
        const auto proxy = decode_as<ProxyKeyPair>(dearmor(as_view(slurp(ws.path("prox.proxy")))));
        for (const std::string& secret :
             {to_hex(master.secret().to_bytes()), to_hex(alice.point.to_bytes()), to_hex(orig.secret.to_bytes()),
              to_hex(proxy.secret_point.to_bytes())}) {
            CHECK(all_out.find(secret) == std::string::npos);
        }
        CHECK((fs::status(ws.path("master")).permissions() & fs::perms::others_read) == fs::perms::none);
    }

    TEST_CASE("proxy workflow") {
        Workspace ws;
        ws.proxy_world();
        const std::string verify =
            "proxy-verify --params params --original-pk orig.pub --proxy-pks p1.pub,p2.pub,p3.pub --msg msg --sig psig ";
        const Run ok = ws.run(verify + "--warrant warrant");
        CHECK(ok.code == 0);
        CHECK(ok.out == "signature valid\n");

        spit(ws.path("warrant2"), "p1..p3 may sign anything");
        CHECK(ws.run(verify + "--warrant warrant2").code == 1);
        CHECK(ws.run("proxy-verify --params params --original-pk p1.pub --proxy-pks p1.pub,p2.pub,p3.pub --msg msg "
                     "--sig psig --warrant warrant")
                  .code == 1);
        CHECK(ws.run("proxy-verify --params params --original-pk orig.pub --proxy-pks p1.pub,p3.pub,p2.pub --msg msg "
                     "--sig psig --warrant warrant")
                  .code == 1);
        CHECK(ws.run("proxy-verify --params params --original-pk orig.pub --proxy-pks p1.pub,p2.pub --msg msg "
                     "--sig psig --warrant warrant")
                  .code == 1);
    }

    TEST_CASE("proxy key generation refuses bad tokens") {
        Workspace ws;
        ws.proxy_world();
        // token issued by someone else
        const Run wrong = ws.run("proxy-keygen --params params --token token --key p1 --original-pk p3.pub --out x");
        CHECK(wrong.code == 2);
        CHECK(one_line(wrong.err));
        CHECK_FALSE(fs::exists(ws.path("x")));

        auto token = decode_as<DelegationToken>(dearmor(as_view(slurp(ws.path("token")))));
        token.warrant = to_bytes("p1..p3 may sign anything");
        spit(ws.path("token2"), armor(token));
        CHECK(ws.run("proxy-keygen --params params --token token2 --key p1 --original-pk orig.pub --out x").code == 2);

        CHECK(ws.run("proxy-sign --params params --original-pk orig.pub --proxy-pks p1.pub,p3.pub --key p2.proxy "
                     "--warrant warrant --msg msg")
                  .code == 2);
    }
}
