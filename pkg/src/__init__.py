"""Package principal de Cyclic Structures."""
