#include "mlcss/ingest.hpp"

#include <fstream>
#include <istream>
#include <string>

#include "mlcss/errors.hpp"

namespace mlcss {

namespace {

std::string trim(const std::string& text) {
    const char* ws = " \t\r\n\v\f";
    const std::size_t first = text.find_first_not_of(ws);
    if (first == std::string::npos) return {};
    const std::size_t last = text.find_last_not_of(ws);
    return text.substr(first, last - first + 1);
}

Sequence make_sequence(const std::string& text, bool fold_case) {
    Sequence seq;
    seq.symbols.reserve(text.size());
    for (unsigned char c : text) {
        if (fold_case && c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
        seq.symbols.push_back(static_cast<Symbol>(c));
    }
    return seq;
}

void parse_plain(std::istream& in, bool fold_case, std::vector<Sequence>& out) {
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        out.push_back(make_sequence(t, fold_case));
    }
}

void parse_fasta(std::istream& in, const std::string& label, bool fold_case,
                 std::vector<Sequence>& out) {
    std::string line;
    std::string record;
    bool in_record = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '>') {
            if (in_record) out.push_back(make_sequence(record, fold_case));
            record.clear();
            in_record = true;
        } else {
            if (!in_record)
                throw InputError(label + ":" + std::to_string(lineno) +
                                 ": sequence data before any FASTA header");
            record += t;
        }
    }
    if (in_record) out.push_back(make_sequence(record, fold_case));
}

} // namespace

std::vector<Sequence> load_sequences(const std::vector<std::string>& inputs,
                                     SeqFormat format, bool fold_case) {
    if (inputs.empty()) throw InputError("no sequence inputs given");

    std::vector<Sequence> out;
    for (const std::string& input : inputs) {
        if (!input.empty() && input[0] == '@') {
            const std::string path = input.substr(1);
            std::ifstream file(path);
            if (!file) throw InputError("cannot open " + path);
            if (format == SeqFormat::Plain)
                parse_plain(file, fold_case, out);
            else
                parse_fasta(file, path, fold_case, out);
        } else {
            out.push_back(make_sequence(input, fold_case));
        }
    }
    if (out.empty()) throw InputError("input set is empty: no sequences loaded");
    return out;
}

} // namespace mlcss
