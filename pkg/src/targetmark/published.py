"""Published reference values for the four simulation tables.

These are the numbers the preset scenarios are meant to reproduce: the
parameter constants stated in the table notes and the full grid of reported
equilibrium values.  They are consumed by the table command's ``--diff`` mode
and by regression tests; the solvers never read from here.

Reported advertising intensities sit on a 0.01 grid and the quantities
printed alongside them were evidently computed from those rounded
intensities, so small deviations from exact solver output are expected.
"""

TABLE_IDS = ("T1", "T2", "T3", "T4")

ROW_LABELS = (
    "Fraction in Group 1 - w1",
    "Group 1 Probability of Purchase - alpha1",
    "Group 2 Probability of Purchase - alpha2",
    "Average Probability of Purchase - G",
    "Advertising w/o Target Marketing - A*",
    "Units Sold w/o Target Marketing - Q*",
    "Price w/o Target Marketing - P(w/o TM)",
    "Advertising for Group 1 - A1",
    "Advertising for Group 2 - A2",
    "Units Sold for Group 1 - Q1",
    "Units Sold for Group 2 - Q2",
    "Price with Target Marketing - P(TM)",
    "Percentage Price Change",
)

PRICE_CHANGE_LABEL = ROW_LABELS[-1]

# Constants from the table notes.  Every preset scenario is built from these
# values; tests assert the match verbatim.
PRESET_MANIFEST = {
    "common": {
        "marginal_cost": 8.0,
        "population": 1000.0,
        "uniform_ad_price": 0.01,
        "targeted_ad_prices": (0.0125, 0.0100),
    },
    "T1": {
        "fixed_cost": 50.0,
        "lambda": 0.10,
        "weights": (0.500, 0.250, 0.100, 0.050),
        "alphas": ((0.40, 0.04),) * 4,
    },
    "T2": {
        "fixed_cost": 50.0,
        "lambda": 0.10,
        "weights": (0.500,) * 4,
        "alphas": ((0.40, 0.04), (0.38, 0.06), (0.34, 0.10), (0.28, 0.16)),
    },
    "T3": {
        "fixed_cost": 100.0,
        "lambda": 0.10,
        "weights": (0.500, 0.250, 0.100, 0.050),
        "alphas": ((0.40, 0.04),) * 4,
    },
    "T4": {
        "fixed_cost": 50.0,
        "lambda": 0.20,
        "weights": (0.500, 0.250, 0.100, 0.050),
        "alphas": ((0.40, 0.04),) * 4,
    },
}

# Reported values, one tuple of four columns per row label.  Price changes
# are in percent, matching the bottom row of each table.
PUBLISHED = {
    "T1": {
        ROW_LABELS[0]: (0.500, 0.250, 0.100, 0.050),
        ROW_LABELS[1]: (0.400, 0.400, 0.400, 0.400),
        ROW_LABELS[2]: (0.040, 0.040, 0.040, 0.040),
        ROW_LABELS[3]: (0.220, 0.130, 0.076, 0.058),
        ROW_LABELS[4]: (4.060, 4.060, 4.060, 4.060),
        ROW_LABELS[5]: (42.080, 24.866, 14.537, 11.094),
        ROW_LABELS[6]: (10.152, 11.643, 14.232, 16.166),
        ROW_LABELS[7]: (6.130, 10.920, 21.580, 32.720),
        ROW_LABELS[8]: (0.140, 0.300, 0.740, 1.330),
        ROW_LABELS[9]: (45.922, 29.402, 15.481, 9.053),
        ROW_LABELS[10]: (0.773, 1.682, 3.119, 4.348),
        ROW_LABELS[11]: (9.907, 10.778, 12.496, 14.200),
        ROW_LABELS[12]: (-2.4, -7.4, -12.2, -12.2),
    },
    "T2": {
        ROW_LABELS[0]: (0.500, 0.500, 0.500, 0.500),
        ROW_LABELS[1]: (0.400, 0.380, 0.340, 0.280),
        ROW_LABELS[2]: (0.040, 0.060, 0.100, 0.160),
        ROW_LABELS[3]: (0.220, 0.220, 0.220, 0.220),
        ROW_LABELS[4]: (4.060, 4.060, 4.060, 4.060),
        ROW_LABELS[5]: (42.080, 42.080, 42.080, 42.080),
        ROW_LABELS[6]: (10.152, 10.152, 10.152, 10.152),
        ROW_LABELS[7]: (6.130, 6.000, 5.580, 4.490),
        ROW_LABELS[8]: (0.140, 0.340, 1.000, 2.560),
        ROW_LABELS[9]: (45.922, 43.219, 37.456, 28.012),
        ROW_LABELS[10]: (0.773, 1.788, 5.000, 12.411),
        ROW_LABELS[11]: (9.907, 9.981, 10.116, 10.247),
        ROW_LABELS[12]: (-2.4, -1.7, -0.4, 0.9),
    },
    "T3": {
        ROW_LABELS[0]: (0.500, 0.250, 0.100, 0.050),
        ROW_LABELS[1]: (0.400, 0.400, 0.400, 0.400),
        ROW_LABELS[2]: (0.040, 0.040, 0.040, 0.040),
        ROW_LABELS[3]: (0.220, 0.130, 0.076, 0.058),
        ROW_LABELS[4]: (7.570, 7.570, 7.570, 7.570),
        ROW_LABELS[5]: (55.363, 32.715, 19.125, 14.596),
        ROW_LABELS[6]: (11.173, 13.370, 17.186, 20.037),
        ROW_LABELS[7]: (11.240, 19.560, 37.060, 40.000),
        ROW_LABELS[8]: (0.310, 0.650, 1.600, 2.840),
        ROW_LABELS[9]: (59.517, 37.248, 18.938, 9.728),
        ROW_LABELS[10]: (1.139, 2.443, 4.492, 6.182),
        ROW_LABELS[11]: (10.832, 12.182, 14.859, 17.552),
        ROW_LABELS[12]: (-3.1, -8.9, -13.5, -12.4),
    },
    "T4": {
        ROW_LABELS[0]: (0.500, 0.250, 0.100, 0.050),
        ROW_LABELS[1]: (0.400, 0.400, 0.400, 0.400),
        ROW_LABELS[2]: (0.040, 0.040, 0.040, 0.040),
        ROW_LABELS[3]: (0.220, 0.130, 0.076, 0.058),
        ROW_LABELS[4]: (3.380, 3.390, 3.390, 3.390),
        ROW_LABELS[5]: (74.033, 43.799, 25.605, 19.541),
        ROW_LABELS[6]: (9.131, 9.915, 11.276, 12.293),
        ROW_LABELS[7]: (4.930, 8.300, 14.910, 20.790),
        ROW_LABELS[8]: (0.170, 0.350, 0.860, 1.450),
        ROW_LABELS[9]: (78.142, 47.422, 23.101, 12.770),
        ROW_LABELS[10]: (1.758, 3.710, 6.729, 8.954),
        ROW_LABELS[11]: (9.021, 9.536, 10.560, 11.533),
        ROW_LABELS[12]: (-1.2, -3.8, -6.3, -6.2),
    },
}

# Context shown with --diff output.
DIFF_NOTES = {
    "common": (
        "published intensities are rounded to a 0.01 grid and the published "
        "quantities/prices were computed from those rounded intensities; "
        "computed columns are exact solver output",
    ),
    "T1": (),
    "T2": (),
    "T3": (
        "the published group-1 intensity in column 4 (40.000) appears capped "
        "by the original search bound; the exact first-order-condition value "
        "is near 54",
    ),
    "T4": (
        "the published uniform intensity varies between 3.380 and 3.390 "
        "across columns despite being invariant to segment composition; "
        "treated as rounding noise",
    ),
}
