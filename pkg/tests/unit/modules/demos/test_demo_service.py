"""Test demonstration sourcing"""

import pytest

from core.exceptions import DimensionMismatchException
from modules.demos.application.commands import GenerateDemoCommand, GenerateDemoHandler
from modules.demos.application.services import DemoService
from modules.demos.domain.services import generate_reach_demo
from modules.demos.infrastructure.persistence import DemoCsvRepository
from core.domain.enums import EnvIdEnum


class TestDemoService:
    """Test DemoService"""
    
    @pytest.fixture
    def service(self):
        return DemoService(DemoCsvRepository())
    
    def test_generated_reach_set(self, service, tiny_config):
        """Test reach sets have no symmetry group"""
        demo_set = service.demonstration_set(tiny_config("point_reach"))
        
        assert demo_set.pair_count == 99
        assert demo_set.group == []
    
    def test_generated_gait_set(self, service, tiny_config):
        """Test gait sets carry the mirror"""
        demo_set = service.demonstration_set(tiny_config("planar_gait"))
        
        assert demo_set.feature_dim == 4
        assert [op.name for op in demo_set.group] == ["mirror"]
    
    def test_file_source(self, service, tiny_config, tmp_path):
        """Test demos can be read from a CSV"""
        # Arrange
        path = DemoCsvRepository().save(generate_reach_demo(amplitude=0.0), tmp_path / "reach.csv")
        config = tiny_config("point_reach", **{"demo.source": "file", "demo.path": str(path)})
        
        # Act
        trajectory = service.trajectory(config)
        
        # Assert
        assert trajectory.name == "reach"
        assert trajectory.length == 100
    
    def test_file_with_wrong_features(self, service, tiny_config, tmp_path):
        """Test a reach demo does not fit the gait environment"""
        path = DemoCsvRepository().save(generate_reach_demo(), tmp_path / "reach.csv")
        config = tiny_config("planar_gait", **{"demo.source": "file", "demo.path": str(path)})
        
        with pytest.raises(DimensionMismatchException):
            service.trajectory(config)


class TestGenerateDemoHandler:
    """Test the gen-demo command handler"""
    
    def test_writes_csv(self, tmp_path):
        """Test the handler writes the environment's demo"""
        repository = DemoCsvRepository()
        handler = GenerateDemoHandler(DemoService(repository), repository)
        
        path = handler.handle(GenerateDemoCommand(env=EnvIdEnum.PlanarGait, output=tmp_path / "gait.csv"))
        
        assert repository.load(path).length == 240
