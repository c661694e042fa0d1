#include "petal/reference_tables.hpp"

#include <array>

namespace petal {

namespace {

constexpr auto H = CoreKind::SingleHub;
constexpr auto C = CoreKind::CompleteCore;

const std::array<ReferenceCell, 14> kHub{{
    {H, 2, 2, 1, 0.80901}, {H, 2, 2, 2, 0.80473}, {H, 2, 2, 3, 0.82569}, {H, 2, 3, 1, 0.90096},
    {H, 2, 3, 2, 0.89987}, {H, 2, 3, 3, 0.91143}, {H, 2, 3, 4, 0.92278}, {H, 3, 2, 1, 0.83851},
    {H, 3, 2, 2, 0.84824}, {H, 3, 2, 3, 0.87040}, {H, 3, 3, 1, 0.91294}, {H, 3, 3, 2, 0.91935},
    {H, 3, 3, 3, 0.93210}, {H, 4, 3, 5, 0.96107},
}};

const std::array<ReferenceCell, 14> kCore{{
    {C, 2, 2, 1, 0.86602}, {C, 2, 2, 2, 0.88191}, {C, 2, 2, 3, 0.90138}, {C, 2, 3, 1, 0.92387},
    {C, 2, 3, 2, 0.93417}, {C, 2, 3, 3, 0.94619}, {C, 2, 3, 4, 0.95514}, {C, 3, 2, 1, 0.86602},
    {C, 3, 2, 2, 0.88191}, {C, 3, 2, 3, 0.90138}, {C, 3, 3, 1, 0.92387}, {C, 3, 3, 2, 0.93417},
    {C, 3, 3, 3, 0.94619}, {C, 4, 3, 5, 0.96172},
}};

}  // namespace

std::span<const ReferenceCell> hub_table() { return kHub; }
std::span<const ReferenceCell> core_table() { return kCore; }

}  // namespace petal
