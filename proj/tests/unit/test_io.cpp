#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "specvol/cache.hpp"
#include "specvol/extract.hpp"
#include "specvol/io.hpp"
#include "specvol/mirzakhani.hpp"
#include "specvol/trec.hpp"
#include "specvol/verify.hpp"

using namespace specvol;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("specvol-test-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Json, RoundTripIsByteIdentical)
{
    for (CurveId curve : {CurveId::Okuyama, CurveId::TopQ, CurveId::WPClassical, CurveId::Airy}) {
        RecursionEngine engine(curve);
        for (Instance inst : sweep_instances(4)) {
            const auto& w = *engine.correlator(inst.g, inst.n);
            std::string once = to_json(w);
            CorrelationDifferential back = differential_from_json(once);
            EXPECT_EQ(back, w);
            EXPECT_EQ(to_json(back), once) << curve_name(curve) << " " << inst.g << "," << inst.n;
        }
    }
}

TEST(Json, Schema)
{
    auto w = base_case(CurveId::TopQ, 1, 1);
    EXPECT_EQ(to_json(w),
              R"({"curve":"topq","g":1,"n":1,"terms":[{"branches":[0],"orders":[2],"coeff":{"gens":{},"num":"1","den":"8"}},)"
              R"({"branches":[0],"orders":[0],"coeff":{"gens":{"2":1},"num":"1","den":"2"}}]})");
    auto classical = base_case(CurveId::WPClassical, 1, 1);
    EXPECT_NE(to_json(classical).find(R"("gens":{"pi2":1})"), std::string::npos);
}

TEST(Json, BigRationalsSurvive)
{
    CorrelationDifferential w{CurveId::TopQ, 0, 3, {}};
    Rational huge = make_rational(Integer("123456789012345678901234567890123"), Integer("98765432109876543210987"));
    w.add({Slot{0, 0}, Slot{0, 0}, Slot{0, 0}}, GradedCoefficient(GeneratorFamily::ZetaQ, huge));
    EXPECT_EQ(differential_from_json(to_json(w)), w);
}

TEST(Json, MalformedInputRejected)
{
    EXPECT_THROW(differential_from_json("{"), FormatError);
    EXPECT_THROW(differential_from_json(R"({"curve":"okuyama","g":1})"), FormatError);
    EXPECT_THROW(differential_from_json(R"({"curve":"nope","g":1,"n":1,"terms":[]})"), FormatError);
    EXPECT_THROW(differential_from_json(
                     R"({"curve":"okuyama","g":1,"n":1,"terms":[{"branches":[1,1],"orders":[0,0],"coeff":{"gens":{},"num":"1","den":"2"}}]})"),
                 FormatError);
    EXPECT_THROW(differential_from_json(
                     R"({"curve":"okuyama","g":1,"n":1,"terms":[{"branches":[1],"orders":[0],"coeff":{"gens":{},"num":"2","den":"4"}}]})"),
                 FormatError);
    EXPECT_THROW(differential_from_json(
                     R"({"curve":"okuyama","g":1,"n":1,"terms":[{"branches":[1],"orders":[0],"coeff":{"gens":{"pi2":1},"num":"1","den":"4"}}]})"),
                 FormatError);
}

TEST(Csv, FlattenedTables)
{
    auto w = base_case(CurveId::Okuyama, 1, 1);
    std::string csv = to_csv(w);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "branches,orders,gens,num,den");
    EXPECT_NE(csv.find("1,0,z2,1,4\n"), std::string::npos);
    EXPECT_NE(csv.find("-1,2,1,-1,16\n"), std::string::npos);

    auto V = MirzakhaniEngine::q_deformed().volume(0, 4);
    EXPECT_NE(to_csv(V).find("0;0;0;0,z2,12,1\n"), std::string::npos);

    RecursionEngine engine(CurveId::Okuyama);
    std::string table = to_csv(discrete_volume(*engine.correlator(1, 2)));
    EXPECT_NE(table.find("1;1,0;0,1,5,96\n"), std::string::npos);
}

TEST(Text, FormatsDispatch)
{
    auto V = MirzakhaniEngine::q_deformed().volume(1, 1);
    EXPECT_EQ(format_polynomial(V, OutputFormat::Text), "1/48*L1^2 + 1/2*z2\n");
    EXPECT_EQ(format_polynomial(V, OutputFormat::Json).front(), '{');
    EXPECT_THROW(parse_format("yaml"), std::invalid_argument);
    RecursionEngine engine(CurveId::Okuyama);
    std::string table = format_quasi(discrete_volume(*engine.correlator(1, 1)), OutputFormat::Text);
    EXPECT_EQ(table, "even: 1/48*b1^2 + 1/2*z2 - 1/12\nodd: 0\n");
}

TEST(Cache, SaveLoadAndLayout)
{
    TempDir dir;
    CorrelatorCache cache(dir.path() / "nested");
    auto w = base_case(CurveId::Okuyama, 1, 1);
    EXPECT_FALSE(cache.load(CurveId::Okuyama, 1, 1).has_value());
    cache.save(w);
    fs::path file = cache.entry_path(CurveId::Okuyama, 1, 1);
    ASSERT_TRUE(fs::exists(file));
    std::string content = slurp(file);
    EXPECT_EQ(content.substr(0, content.find('\n')), kCacheHeader);
    auto back = cache.load(CurveId::Okuyama, 1, 1);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, w);
    EXPECT_EQ(cache.hits(), 1);
    EXPECT_EQ(cache.misses(), 1);
    for (const auto& entry : fs::directory_iterator(dir.path() / "nested"))
        EXPECT_EQ(entry.path().extension(), ".json") << "temporary file left behind";
}

TEST(Cache, DirectoryResolution)
{
    EXPECT_EQ(CorrelatorCache::resolve_directory(std::string("/x/y")), fs::path("/x/y"));
    ::setenv("SPECVOL_CACHE", "/from/env", 1);
    EXPECT_EQ(CorrelatorCache::resolve_directory(std::nullopt), fs::path("/from/env"));
    ::unsetenv("SPECVOL_CACHE");
    EXPECT_EQ(CorrelatorCache::resolve_directory(std::nullopt), fs::path(".specvol-cache"));
}

TEST(Cache, CorruptEntriesAreQuarantined)
{
    TempDir dir;
    CorrelatorCache cache(dir.path());
    fs::path file = cache.entry_path(CurveId::Okuyama, 1, 2);
    for (const std::string& junk : {std::string("not a cache file\n"), std::string(kCacheHeader) + "\n{\"curve\":"}) {
        std::ofstream(file) << junk;
        EXPECT_THROW(cache.load(CurveId::Okuyama, 1, 2), CacheError);
        EXPECT_FALSE(fs::exists(file));
        fs::path quarantined = file;
        quarantined += ".corrupt";
        EXPECT_TRUE(fs::exists(quarantined));
        EXPECT_EQ(slurp(quarantined), junk);
        fs::remove(quarantined);
    }
    // An entry filed under the wrong name is corrupt too.
    std::ofstream(file) << kCacheHeader << '\n' << to_json(base_case(CurveId::Okuyama, 1, 1)) << '\n';
    EXPECT_THROW(cache.load(CurveId::Okuyama, 1, 2), CacheError);
}

TEST(Cache, HitsNeverRecompute)
{
    TempDir dir;
    CorrelatorCache cache(dir.path());
    RecursionEngine engine(CurveId::Okuyama);
    auto truth = *engine.correlator(1, 2);
    cache.save(truth);
    auto poisoned = []() -> CorrelationDifferential { throw std::logic_error("engine must not run on a cache hit"); };
    EXPECT_EQ(cache.fetch(CurveId::Okuyama, 1, 2, poisoned), truth);
    EXPECT_THROW(cache.fetch(CurveId::Okuyama, 2, 1, poisoned), std::logic_error);

    // Same through the engine: a fresh engine answers from the cache alone.
    RecursionEngine cached(CurveId::Okuyama, &cache);
    EXPECT_EQ(*cached.correlator(1, 2), truth);
    EXPECT_EQ(cached.computed_count(), 0);
}
