"""Prime spectra of Leavitt path algebras of finite graphs, computed exactly."""
__version__ = "0.1.0"
