"""ccalg: command-line front end for the conformal twisted Rota-Baxter engine."""

__version__ = "0.1.0"
