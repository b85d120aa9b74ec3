"""Pure numerical geometry library: expressions, spaces, curves, surfaces and checks."""
