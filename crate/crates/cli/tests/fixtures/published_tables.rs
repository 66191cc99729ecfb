//! Rows transcribed from the published calculation tables.

/// (calculation, J, K, M, situation, first term, step) for the first 79 rows.
pub const FIRST_TABLE: [(u64, u64, u64, u64, char, u64, u64); 79] = [
    (1, 2, 2, 2, '<', 4, 2),
    (2, 3, 3, 6, '<', 9, 6),
    (3, 5, 5, 30, '>', 25, 30),
    (4, 7, 5, 30, '<', 35, 30),
    (5, 7, 7, 210, '>', 49, 210),
    (6, 11, 7, 210, '>', 77, 210),
    (7, 13, 7, 210, '>', 91, 210),
    (8, 17, 7, 210, '>', 119, 210),
    (9, 19, 7, 210, '>', 133, 210),
    (10, 23, 7, 210, '>', 161, 210),
    (11, 29, 7, 210, '>', 203, 210),
    (12, 31, 7, 210, '<', 217, 210),
    (13, 11, 11, 2310, '>', 121, 2310),
    (14, 13, 11, 2310, '>', 143, 2310),
    (15, 17, 11, 2310, '>', 187, 2310),
    (16, 19, 11, 2310, '>', 209, 2310),
    (17, 23, 11, 2310, '>', 253, 2310),
    (18, 29, 11, 2310, '>', 319, 2310),
    (19, 31, 11, 2310, '>', 341, 2310),
    (20, 37, 11, 2310, '>', 407, 2310),
    (21, 41, 11, 2310, '>', 451, 2310),
    (22, 43, 11, 2310, '>', 473, 2310),
    (23, 47, 11, 2310, '>', 517, 2310),
    (24, 53, 11, 2310, '>', 583, 2310),
    (25, 59, 11, 2310, '>', 649, 2310),
    (26, 61, 11, 2310, '>', 671, 2310),
    (27, 67, 11, 2310, '>', 737, 2310),
    (28, 71, 11, 2310, '>', 781, 2310),
    (29, 73, 11, 2310, '>', 803, 2310),
    (30, 79, 11, 2310, '>', 869, 2310),
    (31, 83, 11, 2310, '>', 913, 2310),
    (32, 89, 11, 2310, '>', 979, 2310),
    (33, 97, 11, 2310, '>', 1067, 2310),
    (34, 101, 11, 2310, '>', 1111, 2310),
    (35, 103, 11, 2310, '>', 1133, 2310),
    (36, 107, 11, 2310, '>', 1177, 2310),
    (37, 109, 11, 2310, '>', 1199, 2310),
    (38, 113, 11, 2310, '>', 1243, 2310),
    (39, 127, 11, 2310, '>', 1397, 2310),
    (40, 131, 11, 2310, '>', 1441, 2310),
    (41, 137, 11, 2310, '>', 1507, 2310),
    (42, 139, 11, 2310, '>', 1529, 2310),
    (43, 149, 11, 2310, '>', 1639, 2310),
    (44, 151, 11, 2310, '>', 1661, 2310),
    (45, 157, 11, 2310, '>', 1727, 2310),
    (46, 163, 11, 2310, '>', 1793, 2310),
    (47, 167, 11, 2310, '>', 1837, 2310),
    (48, 173, 11, 2310, '>', 1903, 2310),
    (49, 179, 11, 2310, '>', 1969, 2310),
    (50, 181, 11, 2310, '>', 1991, 2310),
    (51, 191, 11, 2310, '>', 2101, 2310),
    (52, 193, 11, 2310, '>', 2123, 2310),
    (53, 197, 11, 2310, '>', 2167, 2310),
    (54, 199, 11, 2310, '>', 2189, 2310),
    (55, 211, 11, 2310, '<', 2321, 2310),
    (56, 13, 13, 30030, '>', 169, 30030),
    (57, 17, 13, 30030, '>', 221, 30030),
    (58, 19, 13, 30030, '>', 247, 30030),
    (59, 23, 13, 30030, '>', 299, 30030),
    (60, 29, 13, 30030, '>', 377, 30030),
    (61, 31, 13, 30030, '>', 403, 30030),
    (62, 37, 13, 30030, '>', 481, 30030),
    (63, 41, 13, 30030, '>', 533, 30030),
    (64, 43, 13, 30030, '>', 559, 30030),
    (65, 47, 13, 30030, '>', 611, 30030),
    (66, 53, 13, 30030, '>', 689, 30030),
    (67, 59, 13, 30030, '>', 767, 30030),
    (68, 61, 13, 30030, '>', 793, 30030),
    (69, 67, 13, 30030, '>', 871, 30030),
    (70, 71, 13, 30030, '>', 923, 30030),
    (71, 73, 13, 30030, '>', 949, 30030),
    (72, 79, 13, 30030, '>', 1027, 30030),
    (73, 83, 13, 30030, '>', 1079, 30030),
    (74, 89, 13, 30030, '>', 1157, 30030),
    (75, 97, 13, 30030, '>', 1261, 30030),
    (76, 101, 13, 30030, '>', 1313, 30030),
    (77, 103, 13, 30030, '>', 1339, 30030),
    (78, 107, 13, 30030, '>', 1391, 30030),
    (79, 109, 13, 30030, '>', 1417, 30030),
];

/// (J, K, M, first term, step) for the eleven J = K rows of the second table.
pub const SECOND_TABLE: [(u64, u64, &str, u64, &str); 11] = [
    (17, 17, "510510", 289, "510510"),
    (19, 19, "9699690", 361, "9699690"),
    (23, 23, "223092870", 529, "223092870"),
    (29, 29, "6469693230", 841, "6469693230"),
    (31, 31, "200560490130", 961, "200560490130"),
    (37, 37, "7420738134810", 1369, "7420738134810"),
    (41, 41, "304250263527210", 1681, "304250263527210"),
    (43, 43, "13082761331670030", 1849, "13082761331670030"),
    (47, 47, "614889782588491410", 2209, "614889782588491410"),
    (53, 53, "32589158477190044730", 2809, "32589158477190044730"),
    (
        101,
        101,
        "232862364358497360900063316880507363070",
        10201,
        "232862364358497360900063316880507363070",
    ),
];
