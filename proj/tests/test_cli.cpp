#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "landau/commands.hpp"

using namespace landau;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string table_csv(std::uint64_t max_n, unsigned threads = 1)
{
    cli::TableArgs a;
    a.max_n = max_n;
    a.threads = threads;
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_table(a, out, err), cli::ok) << err.str();
    return out.str();
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("landau_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text)
    {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    static std::string read(const fs::path& p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path dir_;
};

int plot(const fs::path& in, const std::string& series, std::string& out_text, std::string& err_text,
         const std::string& out_path = "")
{
    cli::PlotArgs a;
    a.in_path = in.string();
    a.series = series;
    a.out_path = out_path;
    std::ostringstream out, err;
    const int code = cli::cmd_plot_data(a, out, err);
    out_text = out.str();
    err_text = err.str();
    return code;
}

} // namespace

TEST(TableCommand, FirstRows)
{
    const auto lines = lines_of(table_csv(5));
    ASSERT_EQ(lines.size(), 6u);
    EXPECT_EQ(lines[0], "n,g_factorization,ell,log_g,largest_prime,ratio");
    EXPECT_EQ(lines[1], "1,1,0,0.000000000000,,");
    const char* facts[] = {"1", "2", "3", "2^2", "2*3"};
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(split_fields(lines[n])[1], facts[n - 1]) << n;
    EXPECT_EQ(lines[5], "5,2*3,5,1.791759469228,3,1.0575456880");
}

TEST(TableCommand, SingleRow)
{
    EXPECT_EQ(table_csv(1), "n,g_factorization,ell,log_g,largest_prime,ratio\n1,1,0,0.000000000000,,\n");
}

TEST(TableCommand, Deterministic)
{
    const auto a = table_csv(800);
    EXPECT_EQ(a, table_csv(800));
    EXPECT_EQ(a, table_csv(800, 3));
}

TEST(TableCommand, RangeErrors)
{
    cli::TableArgs a;
    std::ostringstream out, err;
    a.max_n = 0;
    EXPECT_EQ(cli::cmd_table(a, out, err), cli::usage);
    a.max_n = table_soft_ceiling + 1;
    EXPECT_EQ(cli::cmd_table(a, out, err), cli::usage);
}

TEST(CsvRows, RoundTripProperty)
{
    const auto t = build_table(3000);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t n = 1 + rng() % 3000;
        const auto row = make_row(t, n);
        const auto text = render_row(row);
        const auto back = parse_row(text);
        EXPECT_EQ(back.n, row.n);
        EXPECT_EQ(back.g_fact, row.g_fact);
        EXPECT_EQ(back.ell, row.ell);
        EXPECT_EQ(back.largest_prime, row.largest_prime);
        EXPECT_NEAR(back.log_g, row.log_g, 1e-12);
        EXPECT_EQ(back.ratio.has_value(), row.ratio.has_value());
        EXPECT_EQ(render_row(back), text);
    }
}

TEST(CsvRows, Malformed)
{
    for (const char* bad : {"", "1,1,0", "5,2*3,6,1.79,3,0.95", "5,2*3,5,1.79,5,0.95", "5,2*3,5,x,3,0.95",
                            "5,2*3,5,1.79,3,0.95,7", "-5,2*3,5,1.79,3,0.95"})
        EXPECT_THROW(parse_row(bad), format_error) << bad;
}

TEST(CsvRows, FieldQuoting)
{
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("(3329,1000000]"), "\"(3329,1000000]\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST_F(TempDir, PlotRatioSeries)
{
    const auto in = write("t.csv", table_csv(215));
    std::string out, err;
    ASSERT_EQ(plot(in, "ratio", out, err), cli::ok) << err;
    const auto lines = lines_of(out);
    EXPECT_EQ(lines.size(), 214u);
    EXPECT_EQ(lines.front().substr(0, 2), "2\t");
    EXPECT_EQ(lines.back().substr(0, 4), "215\t");
}

TEST_F(TempDir, PlotLogSeries)
{
    const auto in = write("t.csv", table_csv(10));
    std::string out, err;
    ASSERT_EQ(plot(in, "log_g", out, err), cli::ok) << err;
    const auto lines = lines_of(out);
    EXPECT_EQ(lines.size(), 10u);
    EXPECT_EQ(lines[4], "5\t1.791759469228");
    ASSERT_EQ(plot(in, "P", out, err), cli::ok);
    EXPECT_EQ(lines_of(out).size(), 9u);
    EXPECT_EQ(lines_of(out)[3], "5\t3");
}

TEST_F(TempDir, PlotIsIdempotent)
{
    const auto in = write("t.csv", table_csv(300));
    std::string first, second, err;
    ASSERT_EQ(plot(in, "ratio", first, err), cli::ok);
    ASSERT_EQ(plot(in, "ratio", second, err), cli::ok);
    EXPECT_EQ(first, second);
    const auto to_file = (dir_ / "out.tsv").string();
    ASSERT_EQ(plot(in, "ratio", second, err, to_file), cli::ok);
    EXPECT_TRUE(second.empty());
    EXPECT_EQ(read(to_file), first);
}

TEST_F(TempDir, PlotRejectsMalformedInput)
{
    auto text = table_csv(10);
    text.insert(text.find("\n4,"), "\n7,nonsense,1,2,3,4");
    const auto in = write("bad.csv", text);
    std::string out, err;
    EXPECT_EQ(plot(in, "ratio", out, err), cli::check_failed);
    EXPECT_NE(err.find("line 5"), std::string::npos) << err;

    std::string out2, err2;
    EXPECT_EQ(plot(write("hdr.csv", "a,b\n"), "ratio", out2, err2), cli::check_failed);
    EXPECT_EQ(plot(dir_ / "missing.csv", "ratio", out2, err2), cli::check_failed);
    EXPECT_EQ(plot(write("ok.csv", table_csv(3)), "nope", out2, err2), cli::usage);
}

TEST(VerifyCommand, Reduction)
{
    cli::VerifyArgs a;
    a.which = "reduction";
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_verify(a, out, err), cli::ok) << err.str();
    EXPECT_NE(out.str().find("pass"), std::string::npos);
    a.max_n = 31;
    EXPECT_EQ(cli::cmd_verify(a, out, err), cli::usage);
}

TEST(VerifyCommand, Lemmas)
{
    cli::VerifyArgs a;
    a.which = "lemmas";
    a.max_n = 2000;
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_verify(a, out, err), cli::ok) << err.str();
    EXPECT_NE(out.str().find("0 violations"), std::string::npos);
}

TEST(VerifyCommand, UsageErrors)
{
    cli::VerifyArgs a;
    std::ostringstream out, err;
    a.which = "everything";
    EXPECT_EQ(cli::cmd_verify(a, out, err), cli::usage);
    a.which = "bound";
    a.q_max = 3000;
    EXPECT_EQ(cli::cmd_verify(a, out, err), cli::usage);
    a.q_max = 2'000'000;
    EXPECT_EQ(cli::cmd_verify(a, out, err), cli::usage);
}

TEST_F(TempDir, BoundReportCsv)
{
    cli::VerifyArgs a;
    a.which = "bound";
    a.q_max = 20'000;
    a.out_path = (dir_ / "bound.csv").string();
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_verify(a, out, err), cli::ok) << err.str();
    const auto lines = lines_of(read(a.out_path));
    ASSERT_EQ(lines.size(), 6u);
    EXPECT_EQ(lines[0], "link_name,range,pass,min_passing_q,details");
    EXPECT_EQ(lines[1].substr(0, 30), "two_primes,\"(3329,20000]\",true");
    EXPECT_NE(out.str().find("bound chain: pass"), std::string::npos);
}

TEST(RatioCommand, TopOne)
{
    cli::RatioArgs a;
    a.max_n = 215;
    a.top = 1;
    std::ostringstream out, err;
    ASSERT_EQ(cli::cmd_ratio(a, out, err), cli::ok) << err.str();
    const auto lines = lines_of(out.str());
    ASSERT_GE(lines.size(), 2u);
    EXPECT_EQ(lines[0], "n,P,ratio");
    EXPECT_EQ(lines[1].substr(0, 7), "215,43,");
    EXPECT_EQ(lines[2].substr(0, 13), "argmax n=215 ");
    a.max_n = 4;
    EXPECT_EQ(cli::cmd_ratio(a, out, err), cli::usage);
}

TEST(OracleCommand, Output)
{
    cli::OracleArgs a;
    a.max_n = 40;
    std::ostringstream out, err;
    ASSERT_EQ(cli::cmd_oracle(a, out, err), cli::ok);
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 41u);
    EXPECT_EQ(lines[5], "5,6,6");
    EXPECT_EQ(lines[31].substr(0, 4), "31,,");
    a.max_n = 61;
    EXPECT_EQ(cli::cmd_oracle(a, out, err), cli::usage);
}
