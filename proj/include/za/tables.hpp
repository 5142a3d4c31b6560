#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "za/eval.hpp"

namespace za {

enum class TableId { B1_thm31, B1_partial, B2_thm32, B3_thm4a, B3_HL, B4_cor, B5_thm4b };

std::optional<TableId> parse_table_id(const std::string& name);
std::string table_id_name(TableId id);
std::vector<TableId> all_table_ids();

// eta given as a rule of t so the grid matches the published axes exactly
enum class EtaRule {
    none,        // confluent: eta = t
    const10,     // eta = 10
    t2,          // t^2
    t32,         // t^{3/2}
    t14,         // t^{1/4}
    t512,        // t^{5/12}
    t712,        // t^{7/12}
    t34,         // t^{3/4}
    ten_t,       // 10 t
    sq2pit_100,  // sqrt(2 pi t / 100)
    sq2pit,      // sqrt(2 pi t)
    sq200pit     // sqrt(200 pi t)
};

std::string eta_rule_name(EtaRule r);
Real eta_from_rule(EtaRule r, const Real& t);

struct CellSpec {
    double sigma;
    double t;
    EtaRule eta_rule;
    int N;
    // pinned reference error (3 significant digits) when one is published
    double paper_re;
    double paper_im;
    // which flavor of the table formula the cell uses
    enum class Kind { full_error, first_term_diff, first_two_terms_diff } kind;
};

struct TableSpec {
    TableId table_id;
    std::vector<CellSpec> grid;
    int reference_digits;
};

const TableSpec& builtin_table(TableId id);

struct TableCell {
    CellSpec params;
    Complex computed_error;
    std::optional<Complex> paper_error;
    Real rel_mismatch;
    std::string regime_note;  // nonempty when the cell sits outside its strict regime

    TableCell(Complex err, Real mismatch)
        : params{}, computed_error(std::move(err)), rel_mismatch(std::move(mismatch)) {}
};

std::vector<TableCell> run_table(const TableSpec& spec, const Config& cfg);

// acceptance threshold per table (0.02 for B1/B2, 0.05 for B3-B5)
double mismatch_threshold(TableId id);

enum class TableFormat { md, csv, json };
std::string format_cells(TableId id, const std::vector<TableCell>& cells, TableFormat fmt);

// Re-parse a CSV produced by format_cells (used for round-trip checks).
// field names follow the CSV header contract
struct CsvRow {
    std::string sigma, t, eta, N, err_re, err_im, paper_re, paper_im, rel_mismatch;
};
std::vector<CsvRow> parse_cells_csv(const std::string& csv);

// deterministic 6-significant-digit formatting used in all outputs
std::string format_real(const Real& x);

}  // namespace za
