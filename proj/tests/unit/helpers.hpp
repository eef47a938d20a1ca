#ifndef MLCSS_TESTS_HELPERS_HPP
#define MLCSS_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "mlcss/sequence.hpp"

inline mlcss::Sequence seq(const std::string& text) {
    return mlcss::Sequence::from_bytes(text);
}

inline mlcss::Instance make_instance(const std::vector<std::string>& xs,
                                     const std::vector<std::string>& ys) {
    std::vector<mlcss::Sequence> xseqs;
    std::vector<mlcss::Sequence> yseqs;
    for (const auto& x : xs) xseqs.push_back(seq(x));
    for (const auto& y : ys) yseqs.push_back(seq(y));
    return mlcss::Instance(std::move(xseqs), std::move(yseqs));
}

#endif
