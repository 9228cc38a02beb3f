#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "satgraph/errors.hpp"
#include "satgraph/serialization.hpp"
#include "satgraph/tower.hpp"
#include "test_support.hpp"

namespace satgraph {
namespace {

using testing::share;

Tower hand_tower() {
    auto root = share(FiniteGraph::complete(2));
    auto top = share(FiniteGraph::from_edges(4, std::vector<Edge>{{0, 2}, {1, 3}, {0, 3}}));
    GraphMap bond(top, root, {0, 0, 1, 1});
    return Tower(2, 7, {root, top}, {bond}, {1});
}

TEST(TowerJson, CanonicalText) {
    EXPECT_EQ(encode_tower(hand_tower()),
              "{\"n\":2,\"seed\":7,\"levels\":[{\"v\":2,\"edges\":[[0,1]]},"
              "{\"v\":4,\"edges\":[[0,2],[0,3],[1,3]]}],\"bonds\":[[0,0,1,1]],"
              "\"per_level_m\":[1]}\n");
}

TEST(TowerJson, RoundTripIsByteIdentical) {
    const auto t = extend_tower(extend_tower(new_tower(2, 99)));
    const auto text = encode_tower(t);
    const auto back = decode_tower(text);
    EXPECT_EQ(encode_tower(back), text);
    EXPECT_EQ(back.level(2), t.level(2));
    EXPECT_EQ(back.bond(1), t.bond(1));
    EXPECT_EQ(back.per_level_m(), t.per_level_m());
    EXPECT_TRUE(verify_tower(back).ok);
}

TEST(TowerJson, LargeSeedSurvives) {
    const auto t = new_tower(3, 0xFFFFFFFFFFFFFFFFULL);
    EXPECT_EQ(decode_tower(encode_tower(t)).seed(), 0xFFFFFFFFFFFFFFFFULL);
}

TEST(TowerJson, MalformedInputs) {
    const std::vector<std::string> bad{
        "",
        "{",
        "[]",
        "{\"n\":2}",
        "{\"n\":0,\"seed\":1,\"levels\":[{\"v\":1,\"edges\":[]}],\"bonds\":[],\"per_level_m\":[]}",
        "{\"n\":2,\"seed\":-1,\"levels\":[{\"v\":2,\"edges\":[[0,1]]}],\"bonds\":[],\"per_level_m\":[]}",
        "{\"n\":2,\"seed\":1,\"levels\":[],\"bonds\":[],\"per_level_m\":[]}",
        "{\"n\":2,\"seed\":1,\"levels\":[{\"v\":2,\"edges\":[[1,0]]}],\"bonds\":[],\"per_level_m\":[]}",
        "{\"n\":2,\"seed\":1,\"levels\":[{\"v\":2,\"edges\":[[0,2]]}],\"bonds\":[],\"per_level_m\":[]}",
        "{\"n\":2,\"seed\":1,\"levels\":[{\"v\":2,\"edges\":[[0,1]]}],\"bonds\":[[0]],\"per_level_m\":[]}",
        "{\"n\":2,\"seed\":1,\"levels\":[{\"v\":2,\"edges\":[]},{\"v\":4,\"edges\":[]}],"
        "\"bonds\":[[0,0,1]],\"per_level_m\":[1]}",
        "{\"n\":2,\"seed\":1,\"levels\":[{\"v\":2,\"edges\":[]},{\"v\":4,\"edges\":[]}],"
        "\"bonds\":[[0,0,1,2]],\"per_level_m\":[1]}",
        "{\"n\":2,\"seed\":1,\"levels\":[{\"v\":2,\"edges\":[\"x\"]}],\"bonds\":[],\"per_level_m\":[]}",
    };
    for (const auto& text : bad) {
        EXPECT_THROW(decode_tower(text), MalformedInput) << text;
    }
}

TEST(TowerJson, LoadVerifiesByDefault) {
    const auto dir = std::filesystem::temp_directory_path() / "satgraph_serialization_test";
    std::filesystem::create_directories(dir);
    const auto good = dir / "good.json";
    const auto t = extend_tower(new_tower(2, 4));
    save_tower(t, good);
    EXPECT_EQ(load_tower(good).level(1).vertex_count(), 14U);

    // Same levels under another seed are not what the builder draws.
    const auto path = dir / "reseeded.json";
    save_tower(Tower(2, 5, t.levels(), t.bonds(), t.per_level_m()), path);
    EXPECT_THROW(load_tower(path), InvariantViolation);
    EXPECT_EQ(load_tower(path, false).depth(), 1U);
    std::filesystem::remove_all(dir);
}

TEST(GraphJson, Shape) {
    const auto j = graph_to_json(testing::path_graph(3));
    EXPECT_EQ(j.dump(), "{\"v\":3,\"edges\":[[0,1],[1,2]]}");
    EXPECT_EQ(graph_from_json(j), testing::path_graph(3));
}

TEST(ExportDot, RootLevel) {
    const auto t = new_tower(3, 0);
    EXPECT_EQ(export_dot(t, 0),
              "graph level_0 {\n"
              "  0 [label=\"0\"];\n"
              "  1 [label=\"1\"];\n"
              "  2 [label=\"2\"];\n"
              "  0 -- 1;\n"
              "  0 -- 2;\n"
              "  1 -- 2;\n"
              "}\n");
    EXPECT_THROW(export_dot(t, 1), ContractViolation);
}

TEST(ExportDot, ProductLabelsAndEdgeCount) {
    const auto t = extend_tower(new_tower(2, 12));
    const auto text = export_dot(t, 1);
    EXPECT_NE(text.find("  0 [label=\"(0,0)\"];\n"), std::string::npos);
    EXPECT_NE(text.find("  13 [label=\"(1,6)\"];\n"), std::string::npos);
    std::size_t edges = 0;
    for (std::size_t pos = text.find(" -- "); pos != std::string::npos;
         pos = text.find(" -- ", pos + 1)) {
        ++edges;
    }
    EXPECT_EQ(edges, t.level(1).cross_edge_count());
    EXPECT_EQ(text, export_dot(t, 1));
}

}  // namespace
}  // namespace satgraph
