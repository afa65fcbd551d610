"""String enums shared by configuration, CLI choices and CSV columns"""

import enum


class ExtendedEnum(enum.Enum):
    @classmethod
    def list(cls):
        """All member values, e.g. for argparse choices"""
        return [c.value for c in cls]


class EnvIdEnum(ExtendedEnum):
    PointReach = "point_reach"
    PlanarGait = "planar_gait"


class StyleModeEnum(ExtendedEnum):
    Tracking = "tracking"
    Adversarial = "adversarial"


class ActivationEnum(ExtendedEnum):
    Elu = "elu"
    Identity = "identity"
    Tanh = "tanh"


class TrainingMethodEnum(ExtendedEnum):
    Constrained = "constrained"
    TaskOnly = "task_only"
    FixedW02 = "fixed_w02"
    FixedW05 = "fixed_w05"


class TrainingPhaseEnum(ExtendedEnum):
    Warmup = "warmup"
    Joint = "joint"


class MultiplierCadenceEnum(ExtendedEnum):
    PerEpoch = "per_epoch"
    PerIteration = "per_iteration"


class TrajectorySourceEnum(ExtendedEnum):
    Policy = "policy"
    Demo = "demo"
    Mirrored = "mirrored"


class DemoSourceEnum(ExtendedEnum):
    Generator = "generator"
    File = "file"
