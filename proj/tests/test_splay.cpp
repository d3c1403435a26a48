#include "proplist/splay.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

using namespace proplist;

TEST_CASE("accessed node is splayed to the root") {
    SplayBackend t;
    REQUIRE(t.insert("a", "1").ok());
    REQUIRE(t.insert("b", "2").ok());
    REQUIRE(t.insert("c", "3").ok());
    CHECK(*t.root_name() == "c"); // insert splays the new node

    CHECK(t.lookup("a").value() == "1");
    CHECK(*t.root_name() == "a");
    CHECK(t.inorder_names() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("splay of a random tree preserves the in-order sequence") {
    std::mt19937_64 rng(5);
    SplayBackend t;
    std::vector<std::string> names;
    for (int i = 0; i < 20; ++i) {
        std::string n = "n" + std::to_string(rng() % 1000);
        if (t.insert(n, "v").ok()) names.push_back(n);
    }
    std::sort(names.begin(), names.end());
    REQUIRE(t.inorder_names() == names);

    for (const auto& n : names) {
        CHECK(t.lookup(n).ok());
        CHECK(*t.root_name() == n);
        CHECK(t.inorder_names() == names); // observable order untouched
    }
}

TEST_CASE("unsuccessful lookup splays the last node on the path") {
    SplayBackend t;
    REQUIRE(t.insert("b", "2").ok());
    REQUIRE(t.insert("d", "4").ok());
    CHECK(t.lookup("c").error() == PlError::NotFound);
    // Root is whichever of b/d the search ended on.
    CHECK((*t.root_name() == "b" || *t.root_name() == "d"));
}

TEST_CASE("remove joins the subtrees in order") {
    SplayBackend t;
    REQUIRE(t.insert("b", "2").ok());
    REQUIRE(t.insert("a", "1").ok());
    REQUIRE(t.insert("c", "3").ok());
    CHECK(t.remove("b").value() == "2");
    CHECK(t.size() == 2);
    CHECK(t.inorder_names() == std::vector<std::string>{"a", "c"});
    CHECK(t.lookup("a").value() == "1");
    CHECK(t.lookup("c").value() == "3");
}

TEST_CASE("sorted insertion then repeated lookup hits the root in one touch") {
    SplayBackend t;
    const int n = 64;
    for (int i = 0; i < n; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "k%03d", i);
        REQUIRE(t.insert(buf, "v").ok());
    }
    // First access of the smallest key restructures the degenerate chain.
    CHECK(t.lookup("k000").ok());
    t.reset_work();
    CHECK(t.lookup("k000").ok());
    CHECK(t.work() == 1); // root hit, exactly one node touched
}

TEST_CASE("in-order sequence is strictly increasing after random churn") {
    std::mt19937_64 rng(17);
    SplayBackend t;
    for (int i = 0; i < 2000; ++i) {
        std::string n = "x" + std::to_string(rng() % 64);
        switch (rng() % 3) {
        case 0: t.insert(n, "v"); break;
        case 1: t.remove(n); break;
        case 2: t.lookup(n); break;
        }
        if (i % 97 == 0) {
            auto names = t.inorder_names();
            CHECK(std::is_sorted(names.begin(), names.end()));
            CHECK(std::adjacent_find(names.begin(), names.end()) ==
                  names.end());
            CHECK(names.size() == t.size());
        }
    }
}
