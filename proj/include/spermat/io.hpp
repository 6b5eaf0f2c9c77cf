#pragma once

#include "spermat/counting.hpp"
#include "spermat/graph_classes.hpp"
#include "spermat/oracle.hpp"
#include "spermat/pi_matrix.hpp"
#include "spermat/s_permutation.hpp"
#include "spermat/sudoku.hpp"

#include <string>

// External formats, all 1-based:
//   S-permutation text: first line n, then n^2 lines of n^2 space-separated 0/1
//   Sudoku text:        first line n, then n^2 lines of n^2 integers in [n^2]
//   PiMatrix JSON:      {"n": N, "entries": [[[a,b],...],...]}
//   ClassTable JSON:    {"n": N, "classes": [...], "meta": {...}}; canonical as
//                       row-major bit strings; weights as decimal strings
//   CountReport JSON:   big integers as decimal strings; p as num/den/decimal

namespace spermat {

std::string to_text(const SPermMatrix& m);
SPermMatrix parse_s_perm_text(const std::string& text);

std::string to_text(const SudokuMatrix& m);
SudokuMatrix parse_sudoku_text(const std::string& text);

std::string to_json(const PiMatrix& p);
PiMatrix parse_pi_json(const std::string& text);

std::string to_json(const ClassTable& table);
ClassTable parse_class_table_json(const std::string& text);
std::string to_csv(const ClassTable& table);

std::string to_json(const CountReport& report);

std::string to_json(const OracleResult& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace spermat
