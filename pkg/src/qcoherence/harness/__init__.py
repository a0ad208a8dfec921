"""Random generators, brute-force oracles, property checks and counterexample scans."""
