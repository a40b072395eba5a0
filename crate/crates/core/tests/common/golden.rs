//! Published capacity tables (ε = 1e-4, d = 0.05, 0.10, …, 0.95), used as
//! golden data. Values are in nats.

#![allow(dead_code)]

/// Non-symmetric binary channel: (d, C, D_{1/2}/2, d²/(8 ln 2)).
pub const TABLE1: [(f64, f64, f64, f64); 19] = [
    (0.05, 0.0003, 0.0003, 0.0005),
    (0.10, 0.0013, 0.0013, 0.0018),
    (0.15, 0.0028, 0.0028, 0.0041),
    (0.20, 0.0051, 0.0051, 0.0072),
    (0.25, 0.0080, 0.0080, 0.0113),
    (0.30, 0.0116, 0.0116, 0.0162),
    (0.35, 0.0159, 0.0161, 0.0221),
    (0.40, 0.0210, 0.0213, 0.0289),
    (0.45, 0.0270, 0.0275, 0.0365),
    (0.50, 0.0338, 0.0347, 0.0451),
    (0.55, 0.0417, 0.0430, 0.0546),
    (0.60, 0.0507, 0.0527, 0.0649),
    (0.65, 0.0610, 0.0639, 0.0762),
    (0.70, 0.0728, 0.0771, 0.0884),
    (0.75, 0.0865, 0.0927, 0.1014),
    (0.80, 0.1023, 0.1116, 0.1154),
    (0.85, 0.1211, 0.1350, 0.1303),
    (0.90, 0.1440, 0.1657, 0.1461),
    (0.95, 0.1737, 0.2107, 0.1628),
];

/// BSC: (d, C, exact formula, D_{1/2}/2, d²/(2 ln 2)).
pub const TABLE2: [(f64, f64, f64, f64, f64); 19] = [
    (0.05, 0.0012, 0.0013, 0.0013, 0.0018),
    (0.10, 0.0050, 0.0050, 0.0050, 0.0072),
    (0.15, 0.0113, 0.0113, 0.0114, 0.0162),
    (0.20, 0.0201, 0.0201, 0.0204, 0.0289),
    (0.25, 0.0316, 0.0316, 0.0323, 0.0451),
    (0.30, 0.0457, 0.0457, 0.0472, 0.0649),
    (0.35, 0.0626, 0.0626, 0.0653, 0.0884),
    (0.40, 0.0823, 0.0823, 0.0872, 0.1154),
    (0.45, 0.1050, 0.1050, 0.1131, 0.1461),
    (0.50, 0.1308, 0.1308, 0.1438, 0.1803),
    (0.55, 0.1600, 0.1600, 0.1801, 0.2182),
    (0.60, 0.1927, 0.1927, 0.2231, 0.2597),
    (0.65, 0.2294, 0.2294, 0.2745, 0.3048),
    (0.70, 0.2704, 0.2704, 0.3367, 0.3535),
    (0.75, 0.3164, 0.3164, 0.4133, 0.4058),
    (0.80, 0.3681, 0.3681, 0.5108, 0.4617),
    (0.85, 0.4268, 0.4268, 0.6410, 0.5212),
    (0.90, 0.4946, 0.4946, 0.8304, 0.5843),
    (0.95, 0.5762, 0.5762, 1.1640, 0.6510),
];
