"""Test base entity and aggregate root functionality"""

from core.domain.base_aggregate import AggregateRoot
from core.domain.base_entity import BaseEntity
from core.domain.events import DomainEvent


class SampleEvent(DomainEvent):
    def __init__(self, value: int):
        super().__init__(value=value)


class TestBaseEntity:
    """Test BaseEntity class"""
    
    def test_entity_creation(self):
        """Test entity is created with a generated ID"""
        entity = BaseEntity()
        
        assert isinstance(entity.id, str)
        assert len(entity.id) == 32
    
    def test_entity_with_provided_id(self):
        """Test entity creation with provided ID"""
        assert BaseEntity(id="policy").id == "policy"
    
    def test_entity_equality(self):
        """Test entities are equal if IDs match"""
        assert BaseEntity(id="x") == BaseEntity(id="x")
        assert BaseEntity() != BaseEntity()
    
    def test_entity_hash(self):
        """Test entity hash follows its ID"""
        assert hash(BaseEntity(id="x")) == hash(BaseEntity(id="x"))


class TestAggregateRoot:
    """Test AggregateRoot event bookkeeping"""
    
    def test_pull_domain_events_drains(self):
        """Test pulled events are returned once and then cleared"""
        # Arrange
        aggregate = AggregateRoot()
        aggregate.add_domain_event(SampleEvent(1))
        aggregate.add_domain_event(SampleEvent(2))
        
        # Act
        events = aggregate.pull_domain_events()
        
        # Assert
        assert [e.value for e in events] == [1, 2]
        assert aggregate.pull_domain_events() == []
    
    def test_event_to_dict_carries_type(self):
        """Test event dictionaries name their type"""
        payload = SampleEvent(3).to_dict()
        
        assert payload["event_type"] == "SampleEvent"
        assert payload["value"] == 3
    
    def test_increment_version(self):
        """Test version counts state changes"""
        aggregate = AggregateRoot()
        
        aggregate.increment_version()
        aggregate.increment_version()
        
        assert aggregate.version == 2
