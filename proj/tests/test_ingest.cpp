#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "gfp/ingest.hpp"
#include "gfp/random.hpp"

using namespace gfp;
namespace fs = std::filesystem;

namespace {

fs::path write_lines(const char* name, const std::string& contents) {
    const auto dir = fs::temp_directory_path() / "gfp_ingest_tests";
    fs::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path);
    out << contents;
    return path;
}

const AuthorProfile& profile_of(const CoauthorshipResult& result, std::int64_t author) {
    for (const auto& p : result.profiles)
        if (p.author_id == author) return p;
    throw std::out_of_range("no profile for author");
}

}  // namespace

TEST_CASE("load_records parses JSON lines") {
    const auto path = write_lines("ok.jsonl",
        R"({"paper_id":"P1","authors":[1,2],"citations":10})" "\n"
        R"({"paper_id":"P2","authors":[2,3],"citations":4,"date":"2001-05-06"})" "\n");
    const auto loaded = load_records(path);
    REQUIRE(loaded.records.size() == 2);
    CHECK(loaded.line_errors.empty());
    CHECK(loaded.records[0].paper_id == "P1");
    CHECK(loaded.records[0].author_ids == std::vector<std::int64_t>{1, 2});
    CHECK(loaded.records[1].citations == 4);
    CHECK(loaded.records[1].date == "2001-05-06");
}

TEST_CASE("load_records rejects malformed lines with line numbers") {
    const auto path = write_lines("mixed.jsonl",
        R"({"paper_id":"P1","authors":[1,2],"citations":10})" "\n"
        R"({"paper_id":"P2","authors":[1],"citations":-3})" "\n"
        R"({"paper_id":"P3","authors":[],"citations":0})" "\n"
        R"({"paper_id":"P4","authors":[4,4],"citations":1})" "\n"
        "not json at all\n"
        R"({"paper_id":"P5","citations":2})" "\n");
    const auto loaded = load_records(path);
    CHECK(loaded.records.size() == 1);
    REQUIRE(loaded.line_errors.size() == 5);
    CHECK(loaded.line_errors[0].find("line 2") != std::string::npos);
    CHECK(loaded.line_errors[0].find("negative citation") != std::string::npos);
    CHECK(loaded.line_errors[1].find("empty author list") != std::string::npos);
    CHECK(loaded.line_errors[2].find("duplicate author") != std::string::npos);
}

TEST_CASE("load_records errors on empty or all-invalid files") {
    CHECK_THROWS_WITH_AS(load_records(write_lines("empty.jsonl", "")),
                         doctest::Contains("zero valid records"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load_records(write_lines("junk.jsonl", "hello\nworld\n")),
                         doctest::Contains("zero valid records"), std::runtime_error);
    CHECK_THROWS_AS(load_records("/nonexistent/records.jsonl"), std::runtime_error);
}

TEST_CASE("projection: shared author accumulates over records") {
    const std::vector<PublicationRecord> records{
        {"P1", {1, 2}, 10, std::nullopt},   // a=1, b=2
        {"P2", {2, 3}, 4, std::nullopt},    // b=2, c=3
    };
    const auto result = project_coauthorship(records);
    CHECK(result.graph.node_count() == 3);
    CHECK(result.graph.edge_count() == 2);

    const auto& b = profile_of(result, 2);
    CHECK(b.n_publications == 2);
    CHECK(b.n_citations == 14);
    CHECK(b.n_coauthors == 2);
    CHECK(b.citations_per_publication == 7.0);

    const auto& a = profile_of(result, 1);
    CHECK(a.n_citations == 10);
    CHECK(a.citations_per_publication == 10.0);
}

TEST_CASE("projection: single-author record gives an isolated node") {
    const std::vector<PublicationRecord> records{{"P1", {7}, 5, std::nullopt}};
    const auto result = project_coauthorship(records);
    CHECK(result.graph.node_count() == 1);
    CHECK(result.graph.edge_count() == 0);
    const auto& p = profile_of(result, 7);
    CHECK(p.n_coauthors == 0);
    CHECK(p.citations_per_publication == 5.0);
}

TEST_CASE("projection: repeat collaboration collapses to one link") {
    const std::vector<PublicationRecord> records{
        {"P1", {1, 2}, 0, std::nullopt},
        {"P2", {1, 2}, 0, std::nullopt},
    };
    const auto result = project_coauthorship(records);
    CHECK(result.graph.edge_count() == 1);
    CHECK(profile_of(result, 1).n_publications == 2);
}

TEST_CASE("projection: a single m-author record yields the complete graph") {
    const std::vector<PublicationRecord> records{{"P1", {0, 1, 2, 3, 4}, 3, std::nullopt}};
    const auto result = project_coauthorship(records);
    CHECK(result.graph.node_count() == 5);
    CHECK(result.graph.edge_count() == 10);
    for (const auto& p : result.profiles) CHECK(p.n_coauthors == 4);
}

TEST_CASE("projection: characteristic tables line up with profiles") {
    const std::vector<PublicationRecord> records{
        {"P1", {1, 2}, 10, std::nullopt},
        {"P2", {2, 3}, 4, std::nullopt},
    };
    const auto result = project_coauthorship(records);
    const auto& [coauthors, citations, publications, cpp] = result.characteristics;
    CHECK(coauthors.name() == "coauthors");
    CHECK(citations.name() == "citations");
    CHECK(publications.name() == "publications");
    CHECK(cpp.name() == "citations_per_publication");
    for (std::size_t i = 0; i < result.profiles.size(); ++i) {
        CHECK(coauthors.value(i) == result.profiles[i].n_coauthors);
        CHECK(citations.value(i) == static_cast<double>(result.profiles[i].n_citations));
        CHECK(publications.value(i) == result.profiles[i].n_publications);
        CHECK(cpp.value(i) == result.profiles[i].citations_per_publication);
    }
}

TEST_CASE("projection guards: empty record set, empty author lists, duplicates") {
    CHECK_THROWS_AS(project_coauthorship({}), std::invalid_argument);

    const std::vector<PublicationRecord> with_empty{
        {"P1", {1, 2}, 1, std::nullopt},
        {"P2", {}, 1, std::nullopt},
    };
    const auto result = project_coauthorship(with_empty);
    CHECK(result.skipped_empty_records == 1);
    CHECK(result.graph.node_count() == 2);

    const std::vector<PublicationRecord> with_dup{{"P1", {1, 1}, 1, std::nullopt}};
    CHECK_THROWS_AS(project_coauthorship(with_dup), std::invalid_argument);
}

TEST_CASE("random record sets match a naive recomputation") {
    Rng rng(7701);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t pool = 3 + rng.below(20);
        const std::size_t papers = 1 + rng.below(25);
        std::vector<PublicationRecord> records;
        std::size_t total_author_slots = 0;
        for (std::size_t p = 0; p < papers; ++p) {
            PublicationRecord record;
            record.paper_id = "P" + std::to_string(p);
            record.citations = static_cast<std::int64_t>(rng.below(100));
            const std::size_t count = 1 + rng.below(std::min<std::size_t>(5, pool));
            std::set<std::int64_t> chosen;
            while (chosen.size() < count)
                chosen.insert(static_cast<std::int64_t>(rng.below(pool)));
            record.author_ids.assign(chosen.begin(), chosen.end());
            total_author_slots += record.author_ids.size();
            records.push_back(std::move(record));
        }

        // independent recomputation from scratch
        std::map<std::int64_t, std::set<std::int64_t>> coauthors;
        std::map<std::int64_t, std::int64_t> cites;
        std::map<std::int64_t, std::uint32_t> pubs;
        for (const auto& r : records) {
            for (const auto a : r.author_ids) {
                cites[a] += r.citations;
                pubs[a] += 1;
                for (const auto b : r.author_ids)
                    if (b != a) coauthors[a].insert(b);
            }
        }

        const auto result = project_coauthorship(records);
        std::size_t pub_sum = 0;
        for (const auto& p : result.profiles) {
            CHECK(p.n_coauthors == coauthors[p.author_id].size());
            CHECK(p.n_citations == cites[p.author_id]);
            CHECK(p.n_publications == pubs[p.author_id]);
            CHECK(p.citations_per_publication ==
                  static_cast<double>(cites[p.author_id]) / pubs[p.author_id]);
            pub_sum += p.n_publications;
        }
        CHECK(pub_sum == total_author_slots);

        // degree cross-check against the projected graph
        for (std::size_t i = 0; i < result.graph.node_count(); ++i)
            CHECK(result.graph.degree(static_cast<Graph::NodeId>(i)) ==
                  result.profiles[i].n_coauthors);
    }
}
