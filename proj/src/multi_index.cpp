#include "mlcss/multi_index.hpp"

namespace mlcss {

Strides make_strides(const std::vector<Extent>& dims) {
    if (dims.empty()) throw ContractError("make_strides: no dimensions");
    for (Extent d : dims)
        if (d == 0) throw ContractError("make_strides: zero extent");

    Strides st;
    st.dims = dims;
    st.strides.assign(dims.size(), 1);
    for (std::size_t k = dims.size() - 1; k-- > 0;)
        st.strides[k] = checked_mul(st.strides[k + 1], dims[k + 1]);
    st.total_cells = checked_mul(st.strides[0], dims[0]);
    return st;
}

std::uint64_t flatten(const MultiIndex& idx, const Strides& st) {
    if (idx.size() != st.dims.size())
        throw ContractError("flatten: index arity does not match dims");
    std::uint64_t off = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= st.dims[k])
            throw ContractError("flatten: coordinate out of range");
        off += idx[k] * st.strides[k];
    }
    return off;
}

MultiIndex unflatten(std::uint64_t offset, const Strides& st) {
    if (offset >= st.total_cells)
        throw ContractError("unflatten: offset out of range");
    MultiIndex idx(st.dims.size());
    for (std::size_t k = 0; k < st.dims.size(); ++k) {
        idx[k] = offset / st.strides[k];
        offset %= st.strides[k];
    }
    return idx;
}

MultiIndex recurrence_target(const MultiIndex& idx, const CellOutcome& outcome,
                             std::size_t s, std::size_t t) {
    if (outcome.kind == CellKind::NotSame)
        throw ContractError("recurrence_target: NotSame has no target");
    if (idx.size() != s + t)
        throw ContractError("recurrence_target: index arity does not match s+t");
    for (Coord c : idx)
        if (c == 0) throw ContractError("recurrence_target: index not interior");

    MultiIndex target = idx;
    if (outcome.kind == CellKind::AllMatch) {
        for (Coord& c : target) --c;
        return target;
    }
    if (outcome.mask == 0)
        throw ContractError("recurrence_target: Partial with empty mask");
    if (s < 64 && (outcome.mask >> s) != 0)
        throw ContractError("recurrence_target: mask has bits above position s");
    for (std::size_t p = 0; p < s; ++p)
        if (outcome.mask & (MismatchMask{1} << p)) --target[p];
    return target;
}

bool next_interior(MultiIndex& idx, const std::vector<Extent>& dims) {
    if (idx.size() != dims.size())
        throw ContractError("next_interior: index arity does not match dims");
    for (std::size_t d = idx.size(); d-- > 0;) {
        if (idx[d] + 1 < dims[d]) {
            ++idx[d];
            return true;
        }
        idx[d] = 1;
    }
    return false;
}

} // namespace mlcss
