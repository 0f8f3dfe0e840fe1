"""Exception hierarchy shared by every pforge module."""


class PforgeError(Exception):
    """Base class for all pforge errors."""


class ConfigurationError(PforgeError, ValueError):
    """An execution plan, kernel spec or CLI option is invalid."""


class ParticleDataError(PforgeError, ValueError):
    """Particle input is malformed (non-finite values, bad exclusions, ...)."""


class SingularityError(PforgeError, ArithmeticError):
    """A non-excluded pair sits at zero separation with no softening."""

    def __init__(self, i=None, j=None):
        self.i = None if i is None else int(i)
        self.j = None if j is None else int(j)
        where = "" if i is None else f" between particles {self.i} and {self.j}"
        super().__init__(f"singular interaction{where} (zero separation, no softening)")


class ParseError(PforgeError, ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class SimulationError(PforgeError, ArithmeticError):
    """Integration produced a non-finite state."""

    def __init__(self, step, message="non-finite state"):
        self.step = int(step)
        super().__init__(f"step {self.step}: {message}")
