#pragma once

#include <string_view>
#include <vector>

#include "partq/partitions.hpp"
#include "partq/series.hpp"

namespace partq {

/// Membership in the M(a,m,nu;.) class: every part congruent to a mod m,
/// each of a, m+a, ..., m*nu+a present at least once, and in the m-modular
/// diagram every row below the (nu+2)-Durfee rectangle strictly shorter
/// (in boxes) than the rectangle's width. Requires 0 < a < m, nu >= 0.
bool is_M_member(std::span<const int> parts, int a, int m, int nu);

/// Membership in the N_nu(.) class: each of 1..nu-1 present and every row
/// below the nu-Durfee rectangle of the ordinary Young diagram strictly
/// shorter than its width. Requires nu >= 1.
bool is_N_member(std::span<const int> parts, int nu);

Int count_M(int a, int m, int nu, long n);
Int count_N(int nu, long n);

/// count_M for every weight 0..max_n in one pass per weight.
std::vector<Int> count_M_table(int a, int m, int nu, int max_n);
std::vector<Int> count_N_table(int nu, int max_n);

/// Carrier classes for the restricted counters p(a,m,nu;n),
/// p_o(a,4,nu;n) and p_{2,4}(a,4,nu;n).
enum class Carrier { All, OddParts, Not2Mod4 };

Carrier parse_carrier(std::string_view name);   // all | odd | not2mod4
std::string_view carrier_string(Carrier c);

/// Partitions of n drawn from the carrier class whose sub-multiset of parts
/// congruent to a mod m is an M(a,m,nu;.) member. Direct (definitional)
/// enumeration; the convolution route below must agree with it.
Int count_p_restricted_enum(int a, int m, int nu, long n, Carrier carrier);

/// Same count through the factorisation
///   sum_j count_M(a,m,nu,j) * R(n-j),
/// with R counting carrier partitions having no part congruent to a mod m
/// (computed by exact DP). Used by the identity checks at weights where the
/// dense enumeration would be slow.
Int count_p_restricted_conv(int a, int m, int nu, long n, Carrier carrier);
std::vector<Int> count_p_restricted_table(int a, int m, int nu, int max_n, Carrier carrier);

/// The actual qualifying partitions, in enumeration order (golden tests).
std::vector<Partition> p_restricted_partitions(int a, int m, int nu, long n, Carrier carrier);

/// Overpartitions of n whose non-overlined odd parts form an M(1,2,nu;.)
/// member; overlined parts and non-overlined even parts are free.
Int count_overline_p_restricted(int nu, long n);

/// Bipartitions (pi1, pi2) of n with pi1 unrestricted and pi2's odd parts an
/// M(1,2,nu;.) member. Fast route: qualifying-pi2 table (enumerated odd
/// M-members convolved with an even-parts DP) convolved with a partition
/// count DP.
Int count_pp_e(int nu, long n);
std::vector<Int> count_pp_e_table(int nu, int max_n);
/// Literal brute force over both components, for small-n oracle tests.
Int count_pp_e_brute(int nu, long n);

/// M_nu(n): nu is the smallest integer that is not a part and parts greater
/// than nu outnumber parts less than nu (both with multiplicity).
Int count_M_nu_enum(int nu, long n);
/// Same counts for all weights 0..max_n by a DP over
/// (weight, #parts>nu - #parts<nu); the conjecture scan needs n far beyond
/// enumeration range.
std::vector<Int> count_M_nu_table(int nu, int max_n);
Int count_M_nu(int nu, long n);

/// mu_bar_nu(n): overpartitions in which the first (smallest) part value
/// greater than nu appears at least nu+1 times, overlined or not.
Int count_mu_bar(int nu, long n);

/// MP_nu(n): partitions in which the first part value greater than 2nu-1 is
/// odd and appears exactly nu times, and every other odd part appears at
/// most once.
Int count_MP(int nu, long n);

enum class BasicName { P, OverlineP, Pod, PO, PP };

BasicName parse_basic_name(std::string_view name);

/// Brute-force counts of the five background functions (oracle scale; must
/// match the series coefficients from gen()).
Int count_basic(BasicName name, long n);
/// Exact DP-backed table of the same counts, usable at CLI scale.
std::vector<Int> count_basic_table(BasicName name, int max_n);

/// Partitions of each weight 0..max_n under the constraint, by DP.
std::vector<Int> partition_count_table(const PartitionConstraint& c, int max_n);

} // namespace partq
