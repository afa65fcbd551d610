"""Constrained style-learning training loop"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np

from core.application.base_service import BaseService
from core.domain.events import DomainEvent
from core.exceptions import NotFoundException
from config.run_config import RunConfig
from config.settings import Settings, get_settings
from shared.utils import RandomStreams
from modules.cmdp.application.services import ConstraintController
from modules.cmdp.domain.events import MultiplierUpdatedEvent
from modules.cmdp.domain.services import EmaStatistic
from modules.cmdp.domain.value_objects import DualAdvantages
from modules.demos.application.services import DemoService
from modules.demos.domain.entities import DemonstrationSet
from modules.envs.application.services import VectorEnv, make_environment
from modules.envs.domain.entities import Environment
from modules.evaluation.application.services.rollout_evaluator import PolicyController, RolloutEvaluator
from modules.evaluation.infrastructure.persistence import ScoresTable
from modules.style.application.services import StyleRewardService
from modules.style.domain.value_objects import DiscriminatorLosses
from modules.tensor_nn.application.services import NetworkFactory
from modules.tensor_nn.domain.events import GradientOverflowEvent
from ...domain.entities import Agent, RolloutBuffer, restore_params
from ...domain.exceptions import TrainingDivergedException
from ...domain.services import compute_gae
from ...infrastructure.persistence import Checkpoint, CheckpointRepository, MetricsWriter, RunDirectory
from ..dto import IterationMetrics, PpoStats, RolloutStats, TrainingResult
from .ppo_learner import PpoLearner
from .rollout_collector import RolloutCollector


@dataclass
class TrainingSession:
    """Everything one run mutates while it trains"""
    config: RunConfig
    streams: RandomStreams
    env: Environment
    envs: VectorEnv
    demo_set: DemonstrationSet
    agent: Agent
    style: StyleRewardService
    controller: ConstraintController
    buffer: RolloutBuffer
    collector: RolloutCollector
    learner: PpoLearner
    evaluator: Optional[RolloutEvaluator]
    style_ema: EmaStatistic
    disc_losses: List[DiscriminatorLosses] = field(default_factory=list)

    def reseed(self, iteration: int) -> None:
        """Fresh streams derived from (seed, iteration) for a resumed run"""
        self.streams = RandomStreams(self.config.train.seed, iteration)
        self.envs = VectorEnv(self.env, self.streams.env_streams(self.config.train.num_envs))
        self.collector = RolloutCollector(self.config.train.num_envs)


class TrainingService(BaseService):
    """
    Per iteration: collect a rollout, estimate task and style advantages
    separately, normalize and fuse them with the controller's task weight,
    run PPO epochs (discriminator and multiplier updates after each epoch),
    then advance warm-up / the task constraint and persist the iteration.
    """

    def __init__(
        self,
        demo_service: DemoService,
        factory: NetworkFactory,
        checkpoints: CheckpointRepository,
        settings: Optional[Settings] = None,
    ):
        super().__init__()
        self.demo_service = demo_service
        self.factory = factory
        self.checkpoints = checkpoints
        self.settings = settings or get_settings()

    def build_session(self, config: RunConfig) -> TrainingSession:
        """Networks, environments and controllers for a fresh run; draws from named streams only"""
        t = config.train
        streams = RandomStreams(t.seed)
        env = make_environment(config.env, config.envs)
        demo_set = self.demo_service.demonstration_set(config)

        policy = self.factory.build_policy(
            env.obs_dim, env.action_dim, t.policy_hidden, streams.get("init/policy"), t.init_log_std
        )
        critic_task = self.factory.build_critic(env.obs_dim, t.value_hidden, streams.get("init/critic_task"), "critic_task")
        critic_style = self.factory.build_critic(env.obs_dim, t.value_hidden, streams.get("init/critic_style"), "critic_style")
        style = StyleRewardService.for_config(config, demo_set, self.factory, streams.get("init/discriminator"))
        evaluator = RolloutEvaluator.for_config(config, demo_set.primary) if t.eval_interval > 0 else None

        return TrainingSession(
            config=config,
            streams=streams,
            env=env,
            envs=VectorEnv(env, streams.env_streams(t.num_envs)),
            demo_set=demo_set,
            agent=Agent(policy, critic_task, critic_style, t.learning_rate),
            style=style,
            controller=ConstraintController.for_config(config),
            buffer=RolloutBuffer(t.num_envs, t.steps_per_env, env.obs_dim, env.action_dim, env.feature_dim),
            collector=RolloutCollector(t.num_envs),
            learner=PpoLearner(t),
            evaluator=evaluator,
            style_ema=EmaStatistic(config.cmdp.ema_decay),
        )

    def train(self, config: RunConfig, run_dir: Path, resume: bool = False) -> TrainingResult:
        """
        Run (or continue) training into a run directory.

        Args:
            config: Validated run configuration (the snapshot when resuming)
            run_dir: Run directory root
            resume: Continue from the latest periodic checkpoint

        Raises:
            NotFoundException: Resume requested without a checkpoint
            TrainingDivergedException: A loss became non-finite
        """
        run = RunDirectory(run_dir)
        session = self.build_session(config)
        start = 0
        if resume:
            path = run.resume_checkpoint()
            if path is None:
                raise NotFoundException("Checkpoint", str(run.checkpoints_dir))
            start = self.restore(session, path)
            session.reseed(start)
            self.logger.info("Resuming run", extra={"run_name": config.display_name, "iteration": start})
        else:
            run.create()
            run.write_config(config.snapshot())

        metrics = MetricsWriter(run.metrics_path, resume_from=start if resume else None)
        scores = ScoresTable(run.scores_path) if session.evaluator is not None else None
        total = config.iterations
        context = {"run_name": config.display_name, "seed": config.train.seed, "env_id": config.env.value}
        self.logger.info("Training started", extra={**context, "iterations": total, "start": start})

        for iteration in range(start, total):
            try:
                row = self.run_iteration(session, iteration, scores)
            except TrainingDivergedException as e:
                self.logger.error(e.message, extra={**context, **e.details})
                raise
            metrics.write(row)
            if (iteration + 1) % config.train.checkpoint_interval == 0:
                self.save_checkpoint(session, run.checkpoint_path(iteration + 1), iteration + 1)
            if iteration % self.settings.LOG_INTERVAL == 0 or iteration == total - 1:
                self._log_progress(row, context)

        final = self.save_checkpoint(session, run.final_checkpoint, total)
        state = session.controller.state
        warmup_iterations = None if state.is_baseline or state.warmup else session.controller.monitor.iterations
        self.logger.info("Training finished", extra={**context, "final_checkpoint": str(final)})
        return TrainingResult(
            run_dir=str(run.root),
            iterations=total,
            final_checkpoint=str(final),
            final_task_return_ema=session.controller.v_g,
            v_g_star=state.v_g_star,
            warmup_iterations=warmup_iterations,
        )

    def run_iteration(
        self, session: TrainingSession, iteration: int, scores: Optional[ScoresTable] = None
    ) -> IterationMetrics:
        """One collect / estimate / learn / update cycle"""
        config, streams, controller = session.config, session.streams, session.controller
        t = config.train
        buffer = session.buffer
        phase = controller.phase

        stats = session.collector.collect(session.agent, session.envs, session.style, buffer, streams.get("action"))
        window = controller.observe_rollout(stats.task_episode_returns)
        session.style_ema.update(stats.style_window_return)

        buffer.task_advantages[...], buffer.task_targets[...] = compute_gae(
            buffer.task_rewards, buffer.task_values, buffer.next_task_values,
            buffer.terminated, buffer.dones, t.gamma, t.gae_lambda,
        )
        buffer.style_advantages[...], buffer.style_targets[...] = compute_gae(
            buffer.style_rewards, buffer.style_values, buffer.next_style_values,
            buffer.terminated, buffer.dones, t.gamma, t.gae_lambda,
        )
        buffer.advantages_ready = True
        advantages = DualAdvantages.from_raw(
            buffer.flat(buffer.task_advantages),
            buffer.flat(buffer.style_advantages),
            np.nan if controller.v_g is None else controller.v_g,
        )
        combined = controller.combine(advantages)
        # Weight this iteration trains with; end_iteration may leave warm-up below.
        task_weight = controller.state.task_weight
        if not np.all(np.isfinite(combined)):
            raise TrainingDivergedException("fused advantage", t.seed, iteration)

        policy_pairs = buffer.style_pairs()
        disc_rng = streams.get("discriminator")
        session.disc_losses = []

        def on_epoch_end(epoch: int) -> None:
            for _ in range(config.style.disc_updates_per_epoch):
                losses = session.style.train_discriminator(policy_pairs, disc_rng)
                if losses is not None:
                    session.disc_losses.append(losses)
            controller.multiplier_step(epoch)

        ppo = session.learner.update(
            session.agent, buffer, combined, streams.get("minibatch"), on_epoch_end, iteration
        )
        lam = None if controller.state.is_baseline else controller.state.lam
        controller.end_iteration(iteration)

        imitation = None
        if session.evaluator is not None and (iteration + 1) % t.eval_interval == 0:
            report = session.evaluator.rollout_metrics(
                PolicyController(session.agent.policy, streams.get("eval/action"), deterministic=True),
                t.eval_episodes,
                streams.get("eval/reset"),
            )
            report.iteration = iteration + 1
            imitation = report.imitation_score_mean
            if scores is not None:
                scores.append(report)

        overflows = self._drain_events(session, iteration)
        return self._metrics_row(
            session, iteration, phase.value, task_weight, lam, window, stats, ppo, overflows, imitation
        )

    def save_checkpoint(self, session: TrainingSession, path: Path, iteration: int) -> Path:
        """
        Args:
            iteration: Number of completed iterations, where a resumed run continues
        """
        arrays = {**session.agent.named_arrays(), **session.controller.named_arrays()}
        arrays["trainer.style_ema"] = np.array(np.nan if session.style_ema.value is None else session.style_ema.value)
        head = session.style.head
        if head is not None:
            arrays.update(head.network.params.named_arrays("discriminator"))
            arrays.update(head.optimizer.named_arrays("adam.discriminator"))
        extra = {
            f"meta.activation.{name}": np.array([a.value for a in network.params.activations])
            for name, network in self._networks(session).items()
        }
        checkpoint = Checkpoint(arrays, session.env.env_id.value, iteration, session.env.obs_dim, session.env.action_dim, extra)
        return self.checkpoints.save(checkpoint, path)

    def restore(self, session: TrainingSession, path: Path) -> int:
        """
        Load networks, optimizer moments and controller state into a session.

        Returns:
            The iteration the checkpoint was written after
        """
        checkpoint = self.checkpoints.load(path)
        env = session.env
        checkpoint.require_env(env.env_id.value, env.obs_dim, env.action_dim)
        arrays = checkpoint.arrays
        session.agent.restore(arrays)
        head = session.style.head
        if head is not None:
            restore_params(head.network.params, "discriminator", arrays)
            head.optimizer.restore("adam.discriminator", arrays)
        session.controller.restore(arrays)
        style_ema = float(arrays.get("trainer.style_ema", np.nan))
        session.style_ema.value = None if np.isnan(style_ema) else style_ema
        return checkpoint.iteration

    def _networks(self, session: TrainingSession) -> Dict[str, object]:
        agent = session.agent
        networks = {
            "policy": agent.policy.mean_network,
            "critic_task": agent.critic_task,
            "critic_style": agent.critic_style,
        }
        if session.style.head is not None:
            networks["discriminator"] = session.style.head.network
        return networks

    def _drain_events(self, session: TrainingSession, iteration: int) -> int:
        """Log this iteration's domain events; returns the number of skipped optimizer steps"""
        events: List[DomainEvent] = [
            *session.agent.pull_all_events(),
            *session.style.pull_events(),
            *session.controller.pull_events(),
        ]
        routine = [e for e in events if isinstance(e, MultiplierUpdatedEvent)]
        for event in routine:
            self.logger.debug(event.event_type, extra={"iteration": iteration, "lambda": event.current})
        self.publish_events(
            [e for e in events if not isinstance(e, MultiplierUpdatedEvent)],
            iteration=iteration,
            run_name=session.config.display_name,
        )
        return sum(isinstance(e, GradientOverflowEvent) for e in events)

    def _metrics_row(
        self,
        session: TrainingSession,
        iteration: int,
        phase: str,
        task_weight: float,
        lam: Optional[float],
        window: Optional[float],
        stats: RolloutStats,
        ppo: PpoStats,
        overflows: int,
        imitation: Optional[float],
    ) -> IterationMetrics:
        controller = session.controller
        state = controller.state
        residual = None
        if controller.v_g is not None and state.v_g_star is not None:
            residual = state.residual(controller.v_g)

        disc = {}
        if session.disc_losses:
            disc = {
                "disc_demo_term": float(np.mean([l.demo_term for l in session.disc_losses])),
                "disc_policy_term": float(np.mean([l.policy_term for l in session.disc_losses])),
                "disc_gp_term": float(np.mean([l.gp_term for l in session.disc_losses])),
            }
        return IterationMetrics(
            iteration=iteration,
            phase=phase,
            task_return=window,
            task_return_ema=controller.v_g,
            style_return_window=stats.style_window_return,
            style_return_ema=session.style_ema.value,
            lambda_=lam,
            sigma_lambda=task_weight,
            v_g_star=state.v_g_star,
            constraint_residual=residual,
            policy_loss=ppo.policy_loss,
            value_loss_task=ppo.value_loss_task,
            value_loss_style=ppo.value_loss_style,
            clip_fraction=ppo.clip_fraction,
            kl=ppo.kl,
            gradient_overflows=overflows,
            imitation_score=imitation,
            **disc,
        )

    def _log_progress(self, row: IterationMetrics, context: dict) -> None:
        self.logger.info(
            f"iteration {row.iteration}",
            extra={
                **context,
                "iteration": row.iteration,
                "phase": row.phase,
                "task_return_ema": row.task_return_ema,
                "sigma_lambda": row.sigma_lambda,
                "v_g_star": row.v_g_star,
            },
        )
