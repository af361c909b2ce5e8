from typing import Dict
from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.sampler.managers.factories.sampler_manager_factory import SamplerManagerFactory
from modules.sampler.managers.sampler_manager import SamplerManager


class SamplerConfig:

    @classmethod
    def get(cls) -> Dict[str, FactoryInterface]:
        return {
            SamplerManager.__name__: SamplerManagerFactory()
        }
