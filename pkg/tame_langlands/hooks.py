app_name = "tame_langlands"
app_title = "Tame Langlands"
app_description = "Exact finite models of the tame local Langlands construction"
app_license = "mit"

# Self-test
# ---------
# Acceptance checks run by `tame-langlands selftest`, in report order.
# Each entry is a dotted path to a callable taking SelftestBounds and returning a CheckResult.

selftest_checks = [
    "tame_langlands.selftest.check_automorphism_groups",
    "tame_langlands.selftest.check_green_census",
    "tame_langlands.selftest.check_glauberman",
    "tame_langlands.selftest.check_calibration",
    "tame_langlands.selftest.check_signs_lemma",
    "tame_langlands.selftest.check_structure",
    "tame_langlands.selftest.check_mu",
]

