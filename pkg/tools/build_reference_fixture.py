"""Regenerate src/foi/data/reference_tables.json from the transcription below.

Run from the repo root: python tools/build_reference_fixture.py
Transcription errors are data bugs; fix them here and regenerate.
"""

import hashlib
import json
from pathlib import Path

COUNTRIES = {
    "AUS": "Australia", "AUT": "Austria", "BEL": "Belgium", "CAN": "Canada",
    "CHL": "Chile", "CZE": "Czechia", "DNK": "Denmark", "EST": "Estonia",
    "FIN": "Finland", "FRA": "France", "DEU": "Germany", "GRC": "Greece",
    "HUN": "Hungary", "ISL": "Iceland", "IRL": "Ireland", "ISR": "Israel",
    "ITA": "Italy", "JPN": "Japan", "KOR": "Korea", "LUX": "Luxembourg",
    "MEX": "Mexico", "NLD": "Netherlands", "NZL": "New Zealand", "NOR": "Norway",
    "POL": "Poland", "PRT": "Portugal", "SVK": "Slovakia", "SVN": "Slovenia",
    "ESP": "Spain", "SWE": "Sweden", "CHE": "Switzerland", "TUR": "Turkey",
    "GBR": "United Kingdom", "USA": "United States",
}

# code: F-2020 F-2010 O-2020 O-2010 I-2020 I-2010, each (index, rank)
INDICES = {
    "AUS": [(3.8, 24), (4.6, 13), (5.3, 4), (5.3, 10), (4.6, 12), (4.4, 6)],
    "AUT": [(4.4, 10), (5.1, 9), (5.1, 8), (5.4, 8), (3.9, 18), (4.0, 12)],
    "BEL": [(3.8, 22), (4.2, 17), (4.9, 14), (5.6, 5), (3.6, 22), (3.5, 21)],
    "CAN": [(4.0, 17), (4.2, 18), (4.9, 11), (5.4, 7), (4.6, 11), (4.5, 2)],
    "CHL": [(3.6, 27), (3.8, 21), (3.9, 29), (5.0, 14), (3.8, 19), (4.1, 9)],
    "CZE": [(3.8, 25), (3.4, 27), (4.2, 25), (5.0, 15), (3.2, 25), (3.6, 20)],
    "DNK": [(4.9, 4), (5.3, 8), (5.0, 10), (5.8, 2), (4.7, 9), (4.3, 7)],
    "EST": [(4.2, 16), (3.2, 30), (4.7, 16), (4.9, 16), (3.6, 21), (3.1, 25)],
    "FIN": [(4.6, 7), (5.4, 7), (5.1, 9), (5.7, 3), (4.9, 6), (4.0, 13)],
    "FRA": [(4.2, 15), (4.7, 12), (4.3, 22), (4.5, 21), (3.5, 23), (3.0, 27)],
    "DEU": [(4.4, 11), (4.8, 11), (4.7, 17), (5.3, 11), (4.5, 15), (3.7, 18)],
    "GRC": [(3.3, 30), (3.1, 31), (2.9, 34), (3.7, 32), (1.9, 34), (2.5, 34)],
    "HUN": [(3.1, 33), (3.2, 29), (4.4, 21), (4.6, 19), (2.6, 33), (2.5, 33)],
    "ISL": [(5.3, 1), (5.8, 3), (4.2, 24), (2.3, 34), (5.0, 4), (4.4, 5)],
    "IRL": [(4.3, 14), (4.2, 19), (4.6, 18), (4.2, 28), (5.0, 5), (3.9, 16)],
    "ISR": [(4.5, 9), (3.6, 26), (4.6, 19), (4.9, 17), (4.1, 17), (4.1, 10)],
    "ITA": [(3.5, 28), (3.7, 22), (3.5, 32), (3.8, 30), (2.7, 32), (2.7, 32)],
    "JPN": [(4.7, 6), (5.5, 5), (3.7, 30), (3.7, 31), (4.1, 16), (4.0, 14)],
    "KOR": [(4.3, 12), (4.5, 14), (4.3, 23), (4.3, 26), (3.8, 20), (3.3, 22)],
    "LUX": [(3.8, 23), (6.1, 1), (6.1, 1), (6.6, 1), (4.6, 13), (4.5, 4)],
    "MEX": [(3.0, 34), (2.6, 34), (4.1, 26), (4.0, 29), (3.3, 24), (2.9, 30)],
    "NLD": [(4.3, 13), (4.9, 10), (5.3, 6), (5.5, 6), (5.3, 2), (3.8, 17)],
    "NZL": [(4.5, 8), (4.4, 15), (5.1, 7), (4.5, 20), (4.8, 8), (4.0, 15)],
    "NOR": [(4.7, 5), (5.5, 4), (4.9, 13), (5.7, 4), (4.9, 7), (4.1, 11)],
    "POL": [(3.7, 26), (3.1, 32), (4.0, 28), (4.4, 22), (3.1, 29), (3.1, 26)],
    "PRT": [(3.9, 19), (3.7, 25), (3.7, 31), (4.3, 24), (3.1, 28), (2.9, 29)],
    "SVK": [(3.4, 29), (3.3, 28), (4.8, 15), (4.8, 18), (2.9, 31), (3.3, 23)],
    "SVN": [(4.0, 18), (3.7, 23), (4.5, 20), (5.1, 13), (3.2, 26), (2.7, 31)],
    "ESP": [(3.2, 31), (3.7, 24), (4.0, 27), (4.2, 27), (3.1, 27), (3.0, 28)],
    "SWE": [(4.9, 3), (5.5, 6), (4.9, 12), (5.2, 12), (4.6, 14), (4.1, 8)],
    "CHE": [(5.2, 2), (5.9, 2), (5.4, 3), (5.4, 9), (5.6, 1), (4.9, 1)],
    "TUR": [(3.1, 32), (3.0, 33), (3.2, 33), (3.6, 33), (3.1, 30), (3.1, 24)],
    "GBR": [(3.8, 21), (4.3, 16), (5.3, 5), (4.3, 23), (4.7, 10), (3.6, 19)],
    "USA": [(3.9, 20), (4.1, 20), (5.4, 2), (4.3, 25), (5.3, 3), (4.5, 3)],
}

CLUSTERS = {
    "2010": {
        1: ["GRC", "ITA", "MEX", "PRT", "TUR"],
        3: ["CHL", "CZE", "EST", "HUN", "ISR", "POL", "SVK", "SVN", "ESP"],
        5: ["GBR"],
        6: ["ISL"],
        7: ["BEL", "FRA", "NLD", "IRL", "KOR", "NZL"],
        8: ["AUS", "AUT", "CAN", "DNK", "FIN", "DEU", "JPN", "LUX", "NOR", "SWE", "CHE", "USA"],
    },
    "2020": {
        1: ["CHL", "CZE", "GRC", "ITA", "POL", "PRT", "ESP", "TUR"],
        3: ["BEL", "HUN", "MEX", "SVK", "SVN"],
        4: ["AUS", "LUX", "GBR", "USA"],
        6: ["JPN"],
        7: ["AUT", "EST", "FRA", "KOR"],
        8: ["CAN", "DNK", "FIN", "DEU", "ISL", "IRL", "ISR", "NLD", "NZL", "NOR", "SWE", "CHE"],
    },
}

# F1 F2 O1 O2 I1 I2; None = not calculable (missing inputs)
FACTOR_VALUES = {
    "AUS": [0.90461, -0.68133, 1.17784, 1.2171, 0.73742, -0.05991],
    "AUT": [0.88306, 0.66064, 0.782, 0.1535, 0.38608, 0.1122],
    "BEL": [0.46869, -0.42619, 0.58483, -0.41375, 0.92714, -0.77376],
    "CAN": [1.04208, -0.99068, 0.90789, 0.44586, 0.60159, 0.30379],
    "CHL": [-0.50763, 0.7508, -1.70085, 2.56969, None, None],
    "CZE": [-0.6428, -1.07389, -1.19413, 2.61477, -1.1383, 0.2235],
    "DNK": [0.88487, 0.82919, 1.11359, 0.03465, 1.44666, 0.22057],
    "EST": [0.02385, -0.66533, -0.21154, -0.2309, -1.80263, 1.32682],
    "FIN": [1.61798, 0.15286, 0.60313, 0.73316, 0.71432, 0.94483],
    "FRA": [0.22643, 0.28076, -0.07637, -0.03617, -0.0525, -0.13773],
    "DEU": [0.59582, -0.38042, 0.80676, -0.52349, 0.15389, 0.98802],
    "GRC": [-1.90583, 0.17703, -1.87515, -2.0794, -0.14729, -3.01319],
    "HUN": [-1.08498, -0.93268, -0.97687, -0.89839, -1.68816, -0.09264],
    "ISL": [0.30256, 2.34261, 0.64323, 0.19852, 1.8654, -0.11877],
    "IRL": [0.09556, 0.89805, 0.38738, -0.93625, 0.75268, -0.09006],
    "ISR": [0.86076, -0.41836, -0.26673, -0.24657, -0.15444, 0.46071],
    "ITA": [-1.48673, 0.69454, -0.64899, -1.15326, 0.76058, -2.84741],
    "JPN": [1.60548, -1.44948, -0.772, 0.10761, -0.99936, 0.76482],
    "KOR": [1.14331, -1.80278, -0.1349, -0.63887, -0.61277, -0.2097],
    "LUX": [0.66251, 1.08171, 0.90378, 0.41482, 0.57606, 0.49547],
    "MEX": [-1.41173, -0.9826, -1.99746, -0.0051, -1.16359, -1.43735],
    "NLD": [0.96993, 0.34047, 1.19224, 0.03595, 0.55972, 1.24039],
    "NZL": [0.67362, 0.12666, 0.70428, 1.76388, -0.36821, 1.18571],
    "NOR": [0.46819, 2.61942, 0.91578, 0.36038, 1.45767, 0.12275],
    "POL": [-1.06119, -0.80835, -0.85736, 0.68262, -0.83566, -0.78477],
    "PRT": [-0.96672, 0.51284, -0.63504, -1.27128, -0.26962, -1.14168],
    "SVK": [-1.2646, -0.36799, -0.79413, 0.36188, -1.314, -0.17608],
    "SVN": [-0.8929, 0.03238, None, None, -0.22474, -0.52863],
    "ESP": [-0.51446, 0.67509, -0.46254, -0.34132, -0.17602, -0.61917],
    "SWE": [0.92475, 0.92648, 0.66961, -0.65883, 0.75981, 0.34928],
    "CHE": [None, None, None, None, 0.99119, 1.11049],
    "TUR": [-1.11115, -0.73497, None, None, None, None],
    "GBR": [0.46593, 0.76993, 1.37484, -1.15239, 0.38643, 0.55901],
    "USA": [1.12356, -1.80388, 1.61432, -0.29702, 1.10445, 0.67575],
}

FACTOR_COLUMNS = ["F1", "F2", "O1", "O2", "I1", "I2"]


def main():
    indices = {"2020": {}, "2010": {}}
    for code, cells in INDICES.items():
        f20, f10, o20, o10, i20, i10 = cells
        indices["2020"][code] = {"F": list(f20), "O": list(o20), "I": list(i20)}
        indices["2010"][code] = {"F": list(f10), "O": list(o10), "I": list(i10)}
    clusters = {
        epoch: {code: cid for cid, members in table.items() for code in members}
        for epoch, table in CLUSTERS.items()
    }
    factor_values = {
        code: dict(zip(FACTOR_COLUMNS, vals)) for code, vals in FACTOR_VALUES.items()
    }
    tables = {
        "countries": COUNTRIES,
        "indices": indices,
        "clusters": clusters,
        "factor_columns": FACTOR_COLUMNS,
        "factor_values": factor_values,
    }
    canonical = json.dumps(tables, sort_keys=True, separators=(",", ":"))
    payload = {
        "version": 1,
        "sha256": hashlib.sha256(canonical.encode()).hexdigest(),
        "tables": tables,
    }
    out = Path(__file__).resolve().parents[1] / "src" / "foi" / "data" / "reference_tables.json"
    out.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {out}")
    for epoch, table in clusters.items():
        assert len(table) == 34, (epoch, len(table))
    assert len(indices["2020"]) == len(indices["2010"]) == 34
    assert len(factor_values) == 34


if __name__ == "__main__":
    main()
