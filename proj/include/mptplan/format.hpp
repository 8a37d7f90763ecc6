#pragma once

#include "mptplan/task.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace mptplan {

/*
  The %mpt1 text format. Canonical layout (one item per line, LF endings):

    %mpt1
    vars N
    var <id> <name> <size> <F|D> <layer|-1> [# <value-name>...]
    init
    <value>                  one line per fluent, in variable order
    goal M
    g <var> <val>
    axioms K
    axiom <blen> (<var> <val>)* -> <var> <val>
    ops L
    op <name>
    pre <n> (<var> <val>)*
    eff <m>
    e <clen> (<var> <val>)* <var> <val>
    end

  Blank lines and lines starting with '#' are ignored by the parser and never
  produced by the serializer.
*/
inline constexpr std::string_view kMptMagic = "%mpt1";

// Throws SyntaxError or SemanticError.
Task parse_mpt(std::string_view text);
Task read_mpt_file(const std::filesystem::path &path);

std::string serialize_mpt(const Task &task);
void write_mpt_file(const std::filesystem::path &path, const Task &task);

}  // namespace mptplan
