#include "lieb/catalog.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

namespace lieb {
namespace {

std::string with_c(const std::string& c_list) {
    return R"({"dimension": 3, "generators": ["A", "B", "C"], "parameters": ["z"], "c": )" + c_list + "}";
}

std::string location_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const DocumentError& e) {
        return e.location();
    }
    return "<no error>";
}

TEST(Document, CatalogE2IsTheEuclideanBialgebra) {
    const AlgebraDocument doc = parse_document(catalog::e2_document());
    const LieBialgebra b = to_bialgebra(doc);
    EXPECT_EQ(b.c, fixtures::e2_c());
    EXPECT_EQ(b.f, fixtures::e2_f());
    EXPECT_EQ(b.names, (std::vector<std::string>{"J12", "P1", "P2"}));
    EXPECT_EQ(*to_rmatrix(doc), fixtures::e2_rho());
    EXPECT_EQ(*doc.dual_names, (std::vector<std::string>{"j12", "p1", "p2"}));
}

TEST(Document, SampleFileMatchesCatalog) {
    const AlgebraDocument doc = load_document(std::string(LIEB_SAMPLES_DIR) + "/e2.json");
    EXPECT_EQ(to_bialgebra(doc).c, fixtures::e2_c());
    EXPECT_EQ(to_bialgebra(doc).f, fixtures::e2_f());
}

TEST(Document, EmptyListsGiveAbelianBialgebra) {
    const auto b = to_bialgebra(parse_document(R"({"dimension": 2, "generators": ["A", "B"], "c": [], "f": []})"));
    EXPECT_EQ(b.dim, 2);
    EXPECT_TRUE(b.c.is_zero());
    EXPECT_TRUE(b.f.is_zero());
    EXPECT_TRUE(is_valid(b));
}

TEST(Document, DuplicateOrientedEntriesConflict) {
    EXPECT_EQ(location_of(with_c(R"([[1, 2, 3, "1"], [2, 1, 3, "1"]])")), "/c/1");
    EXPECT_EQ(location_of(with_c(R"([[1, 2, 3, "1"], [2, 1, 3, "-1"]])")), "/c/1");
    EXPECT_EQ(location_of(with_c(R"([[1, 2, 3, "1"], [1, 2, 3, "1"]])")), "/c/1");
}

TEST(Document, StructuralErrors) {
    EXPECT_EQ(location_of(with_c(R"([[1, 1, 3, "1"]])")), "/c/0");
    EXPECT_EQ(location_of(with_c(R"([[1, 4, 3, "1"]])")), "/c/0/1");
    EXPECT_EQ(location_of(with_c(R"([[1, 2, 3, "q"]])")), "/c/0/3");
    EXPECT_EQ(location_of(with_c(R"([[1, 2, 3, "2*"]])")), "/c/0/3");
    EXPECT_EQ(location_of(with_c(R"([[1, 2, 3]])")), "/c/0");
    EXPECT_EQ(location_of(R"({"dimension": 0, "generators": []})"), "/dimension");
    EXPECT_EQ(location_of(R"({"dimension": 2, "generators": ["A"]})"), "/generators");
    EXPECT_EQ(location_of(R"({"dimension": 2, "generators": ["A", "B"], "dual_names": ["a"]})"), "/dual_names");
    EXPECT_EQ(location_of(R"({"dimension": 2, "generators": ["A", "B"], "rmatrix": [[1, 2, "1"], [1, 2, "2"]]})"),
              "/rmatrix/1");
    EXPECT_EQ(location_of("{\"dimension\": 2,"), "");
    EXPECT_THROW(load_document("/nonexistent/doc.json"), DocumentError);
}

TEST(Document, InvalidBialgebraIsRejectedWithDefect) {
    const auto doc = parse_document(
        R"({"dimension": 3, "generators": ["J12", "P1", "P2"], "parameters": ["z"],
            "c": [[1, 2, 3, "1"], [1, 3, 2, "-1"]], "f": [[1, 3, 1, "z"], [2, 3, 2, "-z"]]})");
    EXPECT_NO_THROW(to_structure(doc));
    try {
        to_bialgebra(doc);
        FAIL() << "expected InvalidBialgebra";
    } catch (const InvalidBialgebra& e) {
        EXPECT_FALSE(e.reports()[2].ok());
    }
}

TEST(Document, ExportRoundTrip) {
    const DoubleAlgebra d = fixtures::e2_double();
    const LieBialgebra six = double_as_bialgebra(d);
    const std::string text = export_document("e2-double", six, canonical_rmatrix(d));
    const AlgebraDocument back = parse_document(text);
    EXPECT_EQ(back.name, "e2-double");
    const LieBialgebra b = to_bialgebra(back);
    EXPECT_EQ(b.c, six.c);
    EXPECT_EQ(b.f, six.f);
    EXPECT_EQ(b.names, six.names);
    EXPECT_EQ(*to_rmatrix(back), canonical_rmatrix(d));
    EXPECT_EQ(split_double(b), d);
}

TEST(Catalog, AlgebrasAreValidAndGalileiIsContracted) {
    for (const auto& e : catalog::entries()) {
        if (e.kind != EntryKind::algebra) {
            EXPECT_NE(catalog::find(e.target), nullptr);
            continue;
        }
        const NamedAlgebra a = catalog::algebra(e.key);
        EXPECT_TRUE(is_valid(a.algebra)) << e.key;
        ASSERT_TRUE(a.rmatrix.has_value()) << e.key;
        EXPECT_EQ(cocommutator_from_rmatrix(a.algebra.c, *a.rmatrix), a.algebra.f) << e.key;
    }
    const NamedAlgebra g = catalog::galilei();
    CommutatorTensor c(3);
    c.set(1, 2, 3, 1);
    EXPECT_EQ(g.algebra.c, c);
    EXPECT_EQ(g.algebra.f, fixtures::e2_f());
    EXPECT_EQ(catalog::find("nope"), nullptr);
    EXPECT_THROW(catalog::algebra("nonrel-map"), std::out_of_range);
}

}  // namespace
}  // namespace lieb
