#pragma once

#include "sabotage/alba.hpp"

namespace sabotage::detail {

/// Applies a rewrite to the system's items and logs it.
void record(System& sys, const std::string& stage, const std::string& rule,
            std::vector<Statement> consumed, std::vector<Statement> produced);

/// Items without guards collapse to plain inequalities.
Statement wrap(const std::vector<Guard>& guards, Mega body);

/// Formula side that is pure and reads no deletion context.
bool is_settled(const Formula& f);

void reduce_outer_in_place(System& sys);
void reduce_inner_in_place(System& sys);
void pack_in_place(System& sys);
void ackermann_in_place(System& sys, const std::string& p, Handedness side);
void eliminate_all_in_place(System& sys);

}  // namespace sabotage::detail
