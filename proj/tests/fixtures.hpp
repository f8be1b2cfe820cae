#pragma once

#include "namelens/cooccur.hpp"
#include "namelens/miner.hpp"

#include "test_support.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace namelens::testing {

struct PlantedRename {
    ElementKind kind;
    std::string old_name;
    std::string new_name;
    std::size_t commit_index;
};

// Builds a git repository with five single-token renames and three
// multi-token edits; returns the planted renames in commit order.
inline std::vector<PlantedRename> build_miner_fixture(const TempDir& dir)
{
    const auto& root = dir.path();
    int clock = 1700000000;
    auto commit = [&](const std::string& message) {
        git(root, "add -A", clock);
        git(root, "commit -q -m '" + message + "'", clock);
        clock += 60;
    };
    git(root, "init -q");

    std::string view = "package app;\n"
                       "\n"
                       "public class JsonViewResult {\n"
                       "    private int userCnt;\n"
                       "    public void calc() {\n"
                       "        int a = b;\n"
                       "        return x + y;\n"
                       "    }\n"
                       "}\n";
    std::string sender = "package app;\n"
                         "\n"
                         "class Sender {\n"
                         "    void send(int n) {\n"
                         "        String msg = \"hi\";\n"
                         "        int count = 0;\n"
                         "    }\n"
                         "}\n";
    auto write = [&] {
        dir.write("src/app/JsonViewResult.java", view);
        dir.write("src/app/Sender.java", sender);
    };
    auto replace = [](std::string& text, const std::string& from, const std::string& to) {
        text.replace(text.find(from), from.size(), to);
    };

    write();
    commit("Initial import");                                                        // 0
    replace(view, "public class JsonViewResult {", "public class JsonView {");
    write();
    commit("Rename result class");                                                   // 1
    replace(view, "private int userCnt;", "private int userCount;");
    write();
    commit("Spell out counter name");                                                // 2
    replace(view, "int a = b;", "int c = d;");
    write();
    commit("Change locals");                                                         // 3
    replace(view, "public void calc() {", "public void calculate() {");
    write();
    commit("Rename calc");                                                           // 4
    replace(view, "return x + y;", "return y * z;");
    write();
    commit("Rework expression");                                                     // 5
    replace(sender, "String msg = \"hi\";", "String message = \"hi\";");
    write();
    commit("Expand msg");                                                            // 6
    replace(sender, "int count = 0;", "long total = 1;");
    write();
    commit("Rework counter");                                                        // 7
    replace(sender, "void send(int n) {", "void send(int size) {");
    write();
    commit("Name parameter");                                                        // 8

    return {
        {ElementKind::Class, "JsonViewResult", "JsonView", 1},
        {ElementKind::Variable, "userCnt", "userCount", 2},
        {ElementKind::Method, "calc", "calculate", 4},
        {ElementKind::Variable, "msg", "message", 6},
        {ElementKind::Variable, "n", "size", 8},
    };
}

inline RenameEvent make_rename(const std::string& element, std::size_t index, const std::string& old_name = "oldName",
                               const std::string& new_name = "newName")
{
    RenameEvent e;
    e.element_id = element;
    e.element_kind = ElementKind::Variable;
    e.old_name = old_name;
    e.new_name = new_name;
    e.commit_id = "c" + std::to_string(index);
    e.commit_index = index;
    e.message = "rename " + old_name;
    return e;
}

inline RefactoringEvent make_refactoring(const std::string& element, const std::string& type, std::size_t index)
{
    return {element, type, "c" + std::to_string(index), index};
}

// Ten renames on distinct elements; four of them have a refactoring on the
// same element one to five commits earlier. Distractors sit outside the
// window or on other elements.
struct CooccurFixture {
    std::vector<RenameEvent> renames;
    std::vector<RefactoringEvent> refactorings;
};

inline CooccurFixture build_cooccur_fixture()
{
    CooccurFixture f;
    for (std::size_t i = 0; i < 10; ++i)
        f.renames.push_back(make_rename("src/E" + std::to_string(i) + ".java:E" + std::to_string(i), 20 + 10 * i,
                                        "oldName" + std::to_string(i), "newName" + std::to_string(i)));
    f.refactorings = {
        make_refactoring("src/E0.java:E0", "MoveClass", 19),       // gap 1
        make_refactoring("src/E1.java:E1", "ExtractMethod", 27),   // gap 3
        make_refactoring("src/E2.java:E2", "MoveClass", 35),       // gap 5
        make_refactoring("src/E3.java:E3", "InlineMethod", 48),    // gap 2
        make_refactoring("src/E4.java:E4", "MoveClass", 30),       // gap 30, outside
        make_refactoring("src/E5.java:E5", "ExtractMethod", 200),  // far after
        make_refactoring("src/Other.java:X", "MoveClass", 79),     // other element
    };
    return f;
}

} // namespace namelens::testing
