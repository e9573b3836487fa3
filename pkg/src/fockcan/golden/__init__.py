"""Hand-encoded reference data: the closed-formula tables, the gl(2|1)
block diagrams and a raw tensor action.  None of it calls the engine."""
