"""Exact finite-dimensional toolkit for gabi algebras, their module categories and the monoid case."""
