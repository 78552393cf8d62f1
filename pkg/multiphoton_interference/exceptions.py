"""Custom package exceptions

All exceptions should inherit from the common base exception :exc:`MultiphotonError`.

::

  MultiphotonError
   +-- StateError
   |    +-- InvalidOccupationError
   |    +-- ModeCountMismatchError
   |    +-- UnnormalizedStateError
   |    +-- ShellOverflowError
   +-- NetworkError
   |    +-- InvalidTransmissivityError
   |    +-- InvalidModeError
   +-- PacketError
   |    +-- InvalidBandwidthError
   |    +-- IndefiniteGramError
   |    +-- ResolutionError
   |    +-- VisibilityPhaseError
   |    +-- MatrixShapeError
   +-- ExperimentError
   |    +-- UnknownExperimentError
   |    +-- UnknownSchemeError
   |    +-- InvalidParameterError
   |    +-- TruncationError
   +-- ConfigError

"""


class MultiphotonError(Exception):
    """Error while building or evaluating a multi-photon interference scenario"""


class StateError(MultiphotonError):
    """Fock state cannot be constructed or used as requested"""


class InvalidOccupationError(StateError):
    """Occupation vector holds a negative photon count or no modes at all"""


class ModeCountMismatchError(StateError):
    """Two states or a state and an occupation vector disagree on the number of modes"""


class UnnormalizedStateError(StateError):
    """Operation requires a state flagged as normalized"""


class ShellOverflowError(StateError):
    """Total photon number exceeds the supported shell"""


class NetworkError(MultiphotonError):
    """Optical network element is malformed"""


class InvalidTransmissivityError(NetworkError):
    """Splitter transmissivity lies outside of [0, 1]"""


class InvalidModeError(NetworkError):
    """Element addresses a mode the state does not have"""


class PacketError(MultiphotonError):
    """Wave packet, Gram matrix or joint spectral amplitude is unusable"""


class InvalidBandwidthError(PacketError):
    """Packet bandwidth is not strictly positive"""


class IndefiniteGramError(PacketError):
    """Gram matrix has an eigenvalue below the tolerated floor"""


class ResolutionError(PacketError):
    """Frequency grid is too coarse for the requested quantity to converge"""


class VisibilityPhaseError(PacketError):
    """Visibility quotient carries an imaginary part above tolerance"""


class MatrixShapeError(PacketError):
    """Matrix is not square or its axes do not agree"""


class ExperimentError(MultiphotonError):
    """Experiment cannot be run with the requested settings"""


class UnknownExperimentError(ExperimentError):
    """No experiment is registered under the requested name"""


class UnknownSchemeError(ExperimentError):
    """Experiment does not implement the requested measurement scheme"""


class InvalidParameterError(ExperimentError):
    """Experiment parameter is missing, malformed or out of range"""


class TruncationError(ExperimentError):
    """Truncated input state drops more weight than tolerated"""


class ConfigError(MultiphotonError):
    """Run configuration file or command line options are malformed"""
