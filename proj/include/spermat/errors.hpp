#pragma once

#include <stdexcept>
#include <string>

// Error taxonomy. All indices in messages and accessors are 1-based, matching
// the external formats.
//
// The CLI maps these onto exit codes: ValidationError (and subclasses) -> 2,
// InfeasibleSize -> 3, verification mismatches -> 1.

namespace spermat {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data (parse failures, violated invariants).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Requested size exceeds the configured feasibility limit.
class InfeasibleSize : public Error {
public:
    InfeasibleSize(int n, int limit, const std::string& what_for)
        : Error("infeasible size n=" + std::to_string(n) + " for " + what_for +
                " (limit " + std::to_string(limit) + ")"),
          n_(n) {}
    int n() const { return n_; }

private:
    int n_;
};

// p(1) has denominator (1!)^2 - 1 = 0: there is no "other" matrix to compare with.
class UndefinedForN1 : public Error {
public:
    UndefinedForN1() : Error("p(n) is undefined for n=1: Sigma_1 has a single element") {}
};

// ---- S-permutation grid validation ----

class DimensionNotSquareOfSquare : public ValidationError {
public:
    explicit DimensionNotSquareOfSquare(int rows)
        : ValidationError("grid is " + std::to_string(rows) + " rows; expected n^2 x n^2") {}
};

class RowViolation : public ValidationError {
public:
    explicit RowViolation(int row)
        : ValidationError("RowViolation at row " + std::to_string(row)), row_(row) {}
    int row() const { return row_; }

private:
    int row_;
};

class ColumnViolation : public ValidationError {
public:
    explicit ColumnViolation(int column)
        : ValidationError("ColumnViolation at column " + std::to_string(column)), column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

class BlockViolation : public ValidationError {
public:
    BlockViolation(int block_row, int block_col)
        : ValidationError("BlockViolation at block (" + std::to_string(block_row) + "," +
                          std::to_string(block_col) + ")"),
          block_row_(block_row),
          block_col_(block_col) {}
    int block_row() const { return block_row_; }
    int block_col() const { return block_col_; }

private:
    int block_row_, block_col_;
};

// ---- Pi matrix validation ----

class InvalidPiMatrix : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RowFirstComponentNotPermutation : public InvalidPiMatrix {
public:
    explicit RowFirstComponentNotPermutation(int row)
        : InvalidPiMatrix("row " + std::to_string(row) +
                          ": first components are not a permutation"),
          row_(row) {}
    int row() const { return row_; }

private:
    int row_;
};

class ColumnSecondComponentNotPermutation : public InvalidPiMatrix {
public:
    explicit ColumnSecondComponentNotPermutation(int column)
        : InvalidPiMatrix("column " + std::to_string(column) +
                          ": second components are not a permutation"),
          column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

// ---- mixed-operand and family errors ----

class SizeMismatch : public ValidationError {
public:
    SizeMismatch(int lhs_n, int rhs_n)
        : ValidationError("size mismatch: n=" + std::to_string(lhs_n) + " vs n=" +
                          std::to_string(rhs_n)) {}
};

class FamilySizeWrong : public ValidationError {
public:
    FamilySizeWrong(std::size_t got, std::size_t want)
        : ValidationError("family has " + std::to_string(got) + " matrices; expected " +
                          std::to_string(want)) {}
};

class FamilyNotPairwiseDisjoint : public ValidationError {
public:
    FamilyNotPairwiseDisjoint(int first, int second)
        : ValidationError("family members " + std::to_string(first) + " and " +
                          std::to_string(second) + " are not disjoint"),
          first_(first),
          second_(second) {}
    int first() const { return first_; }
    int second() const { return second_; }

private:
    int first_, second_;
};

class CellUncovered : public ValidationError {
public:
    CellUncovered(int row, int col)
        : ValidationError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                          ") received no value") {}
};

class InvalidSudoku : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// ---- tables and files ----

class IncompleteTable : public Error {
public:
    explicit IncompleteTable(const std::string& why) : Error("incomplete class table: " + why) {}
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, int line)
        : ValidationError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : ValidationError(what), line_(0) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace spermat
