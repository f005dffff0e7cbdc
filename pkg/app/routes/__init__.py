"""HTTP routers, one per pipeline group."""
