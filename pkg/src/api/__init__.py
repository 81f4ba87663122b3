"""HTTP surface for simulations, oracles and block families."""
