#ifndef MLCSS_INGEST_HPP
#define MLCSS_INGEST_HPP

#include <string>
#include <vector>

#include "mlcss/sequence.hpp"

namespace mlcss {

enum class SeqFormat { Plain, Fasta };

// Each input is either an inline literal (one sequence, taken verbatim) or a
// file reference marked with a leading '@'. Plain files hold one sequence per
// non-empty line, surrounding whitespace trimmed; FASTA files hold one
// sequence per '>' record with intra-record line breaks removed. Symbols are
// bytes, lowercased (ASCII only) when fold_case is set.
std::vector<Sequence> load_sequences(const std::vector<std::string>& inputs,
                                     SeqFormat format, bool fold_case);

} // namespace mlcss

#endif
