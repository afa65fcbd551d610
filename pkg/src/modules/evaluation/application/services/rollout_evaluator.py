"""Episode rollouts scored against the demonstration"""

from typing import List, Optional, Sequence

import numpy as np

from core.application.base_service import BaseService
from core.domain.enums import TrajectorySourceEnum
from core.exceptions import DomainException
from config.run_config import RunConfig
from modules.demos.domain.entities import DemoTrajectory
from modules.envs.application.services.env_factory import make_environment
from modules.envs.domain.entities import Environment, PlanarGait
from modules.envs.domain.services.symmetry import SymmetryOperator, symmetry_ops
from modules.tensor_nn.domain.entities import GaussianPolicy
from ...domain.services import (
    DTW_CHANNELS,
    Controller,
    air_time_fractions,
    relaxed_dtw,
    score_from_distance,
    select_channels,
    step_work,
    symmetry_score,
)
from ...domain.value_objects import Trajectory
from ..dto import EpisodeScore, ScoreReport


class PolicyController(Controller):
    """Gaussian policy acting on single observations"""

    def __init__(self, policy: GaussianPolicy, rng: np.random.Generator, deterministic: bool = True):
        self.policy = policy
        self.rng = rng
        self.deterministic = deterministic

    def act(self, state) -> np.ndarray:
        actions, _ = self.policy.sample(state.observation()[None, :], self.rng, self.deterministic)
        return actions[0]


class RolloutEvaluator(BaseService):
    """
    Runs complete episodes one at a time and scores the feature trajectory
    (initial state included) against the demo with relaxed DTW.
    """

    def __init__(
        self,
        env: Environment,
        demo: DemoTrajectory,
        eta: float,
        group: Optional[Sequence[SymmetryOperator]] = None,
        contact_threshold: float = 0.1,
    ):
        super().__init__()
        if not eta > 0:
            raise DomainException("Normalization constant eta must be > 0", {"eta": eta})
        self.env = env
        self.demo = Trajectory(demo.features, TrajectorySourceEnum.Demo)
        self.eta = float(eta)
        self.group = list(symmetry_ops(env.env_id) if group is None else group)
        self.contact_threshold = float(contact_threshold)
        self.channels = DTW_CHANNELS[env.env_id]

    @classmethod
    def for_config(cls, config: RunConfig, demo: DemoTrajectory, eta: Optional[float] = None) -> "RolloutEvaluator":
        return cls(
            make_environment(config.env, config.envs),
            demo,
            eta or config.eval_eta,
            contact_threshold=config.envs.contact_threshold,
        )

    def rollout_metrics(
        self,
        controller: Controller,
        episodes: int,
        rng: np.random.Generator,
        deterministic: bool = True,
    ) -> ScoreReport:
        """
        Args:
            controller: Acts on each state
            episodes: Number of episodes (>= 1)
            rng: Episode reset stream
            deterministic: Recorded in the report; the controller decides how it acts
        """
        if episodes < 1:
            raise DomainException("episodes must be >= 1", {"episodes": episodes})
        scores = [self.run_episode(controller, rng) for _ in range(episodes)]
        report = self._aggregate(scores, deterministic)
        self.logger.debug(report.summary(), extra={"env_id": self.env.env_id.value})
        return report

    def run_episode(self, controller: Controller, rng: np.random.Generator) -> EpisodeScore:
        env = self.env
        state = env.reset(rng)
        features = [state.features()]
        total_return, work = 0.0, 0.0
        while True:
            action = controller.act(state)
            result = env.step(state, action)
            total_return += result.reward
            work += step_work(env, action, result.state)
            features.append(result.features)
            state = result.state
            if result.done:
                break

        trajectory = Trajectory(np.stack(features), TrajectorySourceEnum.Policy)
        distance = relaxed_dtw(select_channels(trajectory, self.channels), select_channels(self.demo, self.channels))
        sym = symmetry_score(trajectory, self.group, self.eta, self.channels) if self.group else None
        air_time = None
        if isinstance(env, PlanarGait):
            air_time = air_time_fractions(trajectory.features[1:, 2:4], self.contact_threshold).tolist()
        return EpisodeScore(
            task_return=total_return,
            dtw=distance,
            imitation_score=score_from_distance(distance, self.eta),
            symmetry_score=sym,
            mechanical_work=work,
            air_time=air_time,
        )

    def _aggregate(self, scores: List[EpisodeScore], deterministic: bool) -> ScoreReport:
        def stats(values):
            values = np.asarray(values, dtype=np.float64)
            return float(np.mean(values)), float(np.std(values))

        task = stats([s.task_return for s in scores])
        dtw = stats([s.dtw for s in scores])
        imit = stats([s.imitation_score for s in scores])
        work_values = [s.mechanical_work for s in scores]
        work = stats(work_values)
        fields = dict(
            env_id=self.env.env_id.value,
            episodes=len(scores),
            deterministic=deterministic,
            eta=self.eta,
            task_return_mean=task[0],
            task_return_std=task[1],
            dtw_mean=dtw[0],
            dtw_std=dtw[1],
            imitation_score_mean=imit[0],
            imitation_score_std=imit[1],
            mechanical_work_mean=work[0],
            mechanical_work_std=work[1],
            mechanical_work_per_episode=work_values,
        )
        if scores[0].symmetry_score is not None:
            fields["symmetry_score_mean"], fields["symmetry_score_std"] = stats([s.symmetry_score for s in scores])
        if scores[0].air_time is not None:
            air = np.array([s.air_time for s in scores])
            fields["air_time_left_mean"], fields["air_time_left_std"] = stats(air[:, 0])
            fields["air_time_right_mean"], fields["air_time_right_std"] = stats(air[:, 1])
        return ScoreReport(**fields)
