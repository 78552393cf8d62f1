# pylint: disable=missing-docstring
from multiphoton_interference.fock_core import FockVector
from multiphoton_interference.fock_core import make_basis_state
from multiphoton_interference.linear_optics import PhaseElement
from multiphoton_interference.linear_optics import SplitterElement
from multiphoton_interference.temporal_modes import GaussianPacket
from multiphoton_interference.temporal_modes import PacketSet
