#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wreathmono/group.hpp"
#include "wreathmono/wreath.hpp"

namespace wm {

enum class GroupId { AwrS2, SwrS2, SfibS2, A2C4, Other };

std::string to_string(GroupId id);
GroupId parse_group_id(const std::string& s);

bool check_product_one(const std::vector<WreathElement>& tuple);

// Schreier generators of K = G cap S_ell^t (kernel of the action on I),
// deduplicated, identities dropped.
std::vector<WreathElement> kernel_K(const std::vector<WreathElement>& tuple);

// The group generated by the tuple in its faithful action on t*ell points.
PermGroup imprimitive_group(const std::vector<WreathElement>& tuple);
// Elements of the image of G in S_t.
std::vector<Perm> top_image(const std::vector<WreathElement>& tuple);

// Image of an element of S_ell wr S_2 in S_2 wr S_2 (order 8): base signs as
// bits (1 = odd) and the top bit.
using SignImage = std::array<int, 3>;
SignImage sign_image(const WreathElement& x);
SignImage sign_multiply(const SignImage& a, const SignImage& b);

struct SignFingerprint {
  std::vector<SignImage> generator_images;
  std::vector<SignImage> subgroup;  // sorted
};
SignFingerprint sign_fingerprint(const std::vector<WreathElement>& tuple);
// Classification of the generated subgroup of S_2 wr S_2.
GroupId classify_fingerprint(const SignFingerprint& fp);

struct ProductTypeReport {
  std::size_t ell = 0, t = 0;
  bool transitive_on_points = false;  // on Delta^I
  bool transitive_on_I = false;
  std::vector<WreathElement> K_generators;
  std::vector<bool> projections_contain_alternating;
  bool K_contains_alternating = false;          // decided by 3-cycle membership
  bool K_order_consistent = false;              // |K| divisible by (ell!/2)^t
  bool jordan_agrees = true;                    // fast path never contradicts the exact test
  std::optional<bool> primitive_by_criterion;   // set when the projection hypothesis holds
  std::optional<bool> primitive_generic;        // block test on Delta^I, if within the size cap
  bool primitive = false;
  BigInt order = 0;
  BigInt K_order = 0;
  std::size_t image_order = 0;
  GroupId group_id = GroupId::Other;
  std::vector<std::string> diagnostics;
};

struct AnalysisOptions {
  // Degree of Delta^I above which the generic block test is skipped.
  std::size_t generic_primitivity_cap = 4096;
  bool compute_K_order = true;
};

ProductTypeReport is_product_type(const std::vector<WreathElement>& tuple, const AnalysisOptions& opt = {});

struct IdentifyResult {
  GroupId id = GroupId::Other;
  SignFingerprint fingerprint;
  bool order_matches = false;
  std::vector<std::string> diagnostics;
};
IdentifyResult identify_group(const std::vector<WreathElement>& tuple);
// Same, reusing an existing analysis.
IdentifyResult identify_group(const std::vector<WreathElement>& tuple, const ProductTypeReport& rep);

}  // namespace wm
