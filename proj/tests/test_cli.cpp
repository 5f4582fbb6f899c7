// Drives the tensorctl binary end to end and checks every file effect
// against the equivalent direct library call.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <doctest.h>

#include "ndview/ndview.hpp"
#include "support/checks.hpp"
#include "support/sample_views.hpp"
#include "support/tensor_compare.hpp"

using namespace ndview;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

class CliFixture {
public:
    CliFixture() {
        dir_ = fs::temp_directory_path() /
               ("ndview-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
        fs::create_directories(dir_);
    }
    ~CliFixture() { fs::remove_all(dir_); }

    fs::path path(const std::string& name) const { return dir_ / name; }

    RunResult run(const std::string& args) const {
        const fs::path out = dir_ / "stdout.txt";
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = std::string(TENSORCTL_BIN) + " " + args + " > " + out.string() +
                                " 2> " + err.string();
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

private:
    fs::path dir_;
    static inline int counter_ = 0;
};

AnyTensor iota_tensor(Shape shape, CoordinateOrder order = CoordinateOrder::last_major) {
    auto t = Tensor<std::int32_t>::uninitialized(std::move(shape), order);
    std::iota(t.begin(), t.end(), 1);
    return t;
}

} // namespace

TEST_CASE("cli: info reports the header fields") {
    CliFixture fx;
    write_tensor_file(fx.path("t.mtf"), Tensor<double>::filled({7, 8}, 0.5));
    const auto r = fx.run("info " + fx.path("t.mtf").string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "dimension: 2\nshape: 7,8\norder: lcmo\nkind: f64\nsize: 56\n");
}

TEST_CASE("cli: print renders both styles") {
    CliFixture fx;
    // the (2,4,6) strided window over the shared example, materialized
    const auto buf = sample::buffer();
    write_tensor_file(fx.path("v6.mtf"),
                      to_tensor(View<const std::int32_t>(sample::v6(), buf.data())));

    auto m = fx.run("print " + fx.path("v6.mtf").string());
    CHECK(m.exit_code == 0);
    CHECK(m.out == "2 4 6\n");

    auto t = fx.run("print " + fx.path("v6.mtf").string() + " --style table");
    CHECK(t.exit_code == 0);
    CHECK(t.out == "0  2\n1  4\n2  6\n");

    CHECK(fx.run("print " + fx.path("v6.mtf").string() + " --style fancy").exit_code == 2);
}

TEST_CASE("cli: new writes the requested tensor") {
    CliFixture fx;
    const auto out = fx.path("n.mtf").string();
    CHECK(fx.run("new --shape 2,3 --fill 1.5 --kind f32 --order fcmo " + out).exit_code == 0);
    const AnyTensor t = read_tensor_file(out);
    CHECK(tu::any_tensors_identical(
        t, Tensor<float>::filled({2, 3}, 1.5f, CoordinateOrder::first_major)));

    CHECK(fx.run("new --shape 3 --fill 200 --kind u8 " + fx.path("u.mtf").string()).exit_code ==
          0);
    CHECK(tu::any_tensors_identical(read_tensor_file(fx.path("u.mtf")),
                                    Tensor<std::uint8_t>::filled({3}, std::uint8_t{200})));

    CHECK(fx.run("new --shape 2 --fill 0 --kind f16 " + out).exit_code == 2);
    CHECK(fx.run("new --shape 2,0 --fill 0 " + out).exit_code == 4);
}

TEST_CASE("cli: shift matches the library transform") {
    CliFixture fx;
    write_tensor_file(fx.path("t.mtf"), iota_tensor({2, 3, 7}));
    CHECK(fx.run("shift " + fx.path("t.mtf").string() + " --by 1 " +
                 fx.path("out.mtf").string())
              .exit_code == 0);

    const AnyTensor in = read_tensor_file(fx.path("t.mtf"));
    const auto& t = std::get<Tensor<std::int32_t>>(in);
    const AnyTensor expect =
        to_tensor(View<const std::int32_t>(cyclic_shift(t.descriptor(), 1), t.data()));
    CHECK(tu::any_tensors_identical(read_tensor_file(fx.path("out.mtf")), expect));
    CHECK(tu::vec(descriptor_of(expect).shape()) == Shape{7, 2, 3});
}

TEST_CASE("cli: reshape failures leave no output behind") {
    CliFixture fx;
    write_tensor_file(fx.path("t.mtf"), iota_tensor({3, 2, 4}));
    const auto r =
        fx.run("reshape " + fx.path("t.mtf").string() + " --shape 5,5 " +
               fx.path("bad.mtf").string());
    CHECK(r.exit_code == 4);
    CHECK(r.err.find("size_mismatch") != std::string::npos);
    CHECK_FALSE(fs::exists(fx.path("bad.mtf")));
    CHECK_FALSE(fs::exists(fx.path("bad.mtf.tmp")));

    CHECK(fx.run("reshape " + fx.path("t.mtf").string() + " --shape 2,12 " +
                 fx.path("ok.mtf").string())
              .exit_code == 0);
    CHECK(tu::vec(descriptor_of(read_tensor_file(fx.path("ok.mtf"))).shape()) == Shape{2, 12});
}

TEST_CASE("cli: resize preserves the matching block") {
    CliFixture fx;
    write_tensor_file(fx.path("t.mtf"), iota_tensor({2, 3}));
    CHECK(fx.run("resize " + fx.path("t.mtf").string() + " --shape 4,2 --fill 9 " +
                 fx.path("out.mtf").string())
              .exit_code == 0);

    auto expect = std::get<Tensor<std::int32_t>>(read_tensor_file(fx.path("t.mtf")));
    expect.resize(Shape{4, 2}, 9);
    CHECK(tu::any_tensors_identical(read_tensor_file(fx.path("out.mtf")), AnyTensor(expect)));
}

TEST_CASE("cli: permute, transpose, bind, and slice match the library") {
    CliFixture fx;
    write_tensor_file(fx.path("t.mtf"), iota_tensor({3, 2, 4}));
    const AnyTensor decoded = read_tensor_file(fx.path("t.mtf"));
    const auto& t = std::get<Tensor<std::int32_t>>(decoded);
    const auto materialized = [&](const ViewDescriptor& d) {
        return AnyTensor(to_tensor(View<const std::int32_t>(d, t.data())));
    };
    const std::string file = fx.path("t.mtf").string();

    CHECK(fx.run("permute " + file + " --perm 1,0,2 " + fx.path("p.mtf").string()).exit_code ==
          0);
    CHECK(tu::any_tensors_identical(
        read_tensor_file(fx.path("p.mtf")),
        materialized(permute(t.descriptor(), std::vector<std::size_t>{1, 0, 2}))));

    CHECK(fx.run("transpose " + file + " --axes 0,2 " + fx.path("tr.mtf").string()).exit_code ==
          0);
    CHECK(tu::any_tensors_identical(read_tensor_file(fx.path("tr.mtf")),
                                    materialized(transpose(t.descriptor(), 0, 2))));

    CHECK(fx.run("transpose " + file + " " + fx.path("ta.mtf").string()).exit_code == 0);
    CHECK(tu::any_tensors_identical(read_tensor_file(fx.path("ta.mtf")),
                                    materialized(transpose_all(t.descriptor()))));

    CHECK(fx.run("bind " + file + " --axis 0 --at 1 " + fx.path("b.mtf").string()).exit_code ==
          0);
    CHECK(tu::any_tensors_identical(read_tensor_file(fx.path("b.mtf")),
                                    materialized(bind(t.descriptor(), 0, 1))));

    CHECK(fx.run("slice " + file + " --base 1,0,2 --shape 2,1,2 --squeeze " +
                 fx.path("s.mtf").string())
              .exit_code == 0);
    CHECK(tu::any_tensors_identical(
        read_tensor_file(fx.path("s.mtf")),
        materialized(squeeze(sub_view(t.descriptor(), Coordinate{1, 0, 2}, Shape{2, 1, 2})))));

    CHECK(fx.run("slice " + file + " --base 2,0,0 --shape 2,2,2 " + fx.path("x.mtf").string())
              .exit_code == 4);
    CHECK(fx.run("transpose " + file + " --axes 0,1,2 " + fx.path("x.mtf").string())
              .exit_code == 2);
}

TEST_CASE("cli: binop combines files and scalars") {
    CliFixture fx;
    write_tensor_file(fx.path("a.mtf"), iota_tensor({2, 3}));
    write_tensor_file(fx.path("b.mtf"), iota_tensor({2, 3}));
    const AnyTensor decoded_a = read_tensor_file(fx.path("a.mtf"));
    const AnyTensor decoded_b = read_tensor_file(fx.path("b.mtf"));
    const auto& a = std::get<Tensor<std::int32_t>>(decoded_a);
    const auto& b = std::get<Tensor<std::int32_t>>(decoded_b);

    CHECK(fx.run("binop add " + fx.path("a.mtf").string() + " " + fx.path("b.mtf").string() +
                 " " + fx.path("sum.mtf").string())
              .exit_code == 0);
    CHECK(tu::any_tensors_identical(read_tensor_file(fx.path("sum.mtf")),
                                    AnyTensor(a + b)));

    CHECK(fx.run("binop mul " + fx.path("a.mtf").string() + " --scalar 10 " +
                 fx.path("x10.mtf").string())
              .exit_code == 0);
    CHECK(tu::any_tensors_identical(read_tensor_file(fx.path("x10.mtf")), AnyTensor(a * 10)));

    // mismatched shapes and kinds are domain errors
    write_tensor_file(fx.path("c.mtf"), iota_tensor({3, 2}));
    CHECK(fx.run("binop add " + fx.path("a.mtf").string() + " " + fx.path("c.mtf").string() +
                 " " + fx.path("y.mtf").string())
              .exit_code == 4);
    write_tensor_file(fx.path("d.mtf"), Tensor<double>::filled({2, 3}, 1.0));
    CHECK(fx.run("binop add " + fx.path("a.mtf").string() + " " + fx.path("d.mtf").string() +
                 " " + fx.path("y.mtf").string())
              .exit_code == 4);
    CHECK(fx.run("binop div " + fx.path("a.mtf").string() + " --scalar 0 " +
                 fx.path("y.mtf").string())
              .exit_code == 4);
    CHECK(fx.run("binop pow " + fx.path("a.mtf").string() + " --scalar 2 " +
                 fx.path("y.mtf").string())
              .exit_code == 2);
    CHECK_FALSE(fs::exists(fx.path("y.mtf")));
}

TEST_CASE("cli: file and format problems exit with 3") {
    CliFixture fx;
    CHECK(fx.run("info " + fx.path("missing.mtf").string()).exit_code == 3);

    std::ofstream(fx.path("junk.mtf"), std::ios::binary) << "XXXX????????";
    const auto r = fx.run("info " + fx.path("junk.mtf").string());
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("bad_magic") != std::string::npos);

    write_tensor_file(fx.path("t.mtf"), iota_tensor({2, 2}));
    const std::string whole = slurp(fx.path("t.mtf"));
    std::ofstream(fx.path("short.mtf"), std::ios::binary)
        << whole.substr(0, whole.size() - 3);
    CHECK(fx.run("info " + fx.path("short.mtf").string()).exit_code == 3);
}

TEST_CASE("cli: usage problems exit with 2") {
    CliFixture fx;
    CHECK(fx.run("frobnicate").exit_code == 2);
    CHECK(fx.run("new --fill 1 " + fx.path("x.mtf").string()).exit_code == 2); // no --shape
    CHECK(fx.run("shift --by 1").exit_code == 2);
    CHECK(fx.run("--help").exit_code == 0);
}
