/**
 * Job-title selector: "all tracks" plus the three query terms.
 */

const TERM_LABELS: Record<string, string> = {
  all: "all tracks",
  data_scientist: "data scientist",
  data_analyst: "data analyst",
  ml_engineer: "machine learning engineer",
};

export function termLabel(term: string): string {
  return TERM_LABELS[term] ?? term.replace(/_/g, " ");
}

export interface TermSelectorController {
  element: HTMLElement;
  setTerms(terms: string[]): void;
  setValue(term: string): void;
  destroy(): void;
}

export function createTermSelector(options: {
  onChange: (term: string) => void;
}): TermSelectorController {
  const element = document.createElement("label");
  element.className = "control term-selector";
  element.append("Track ");

  const select = document.createElement("select");
  select.setAttribute("aria-label", "job title track");
  element.append(select);

  const handleChange = () => options.onChange(select.value);
  select.addEventListener("change", handleChange);

  return {
    element,

    setTerms(terms) {
      const previous = select.value;
      select.replaceChildren();
      for (const term of terms) {
        const option = document.createElement("option");
        option.value = term;
        option.textContent = termLabel(term);
        select.append(option);
      }
      if (terms.includes(previous)) select.value = previous;
    },

    setValue(term) {
      if (select.value !== term) select.value = term;
    },

    destroy() {
      select.removeEventListener("change", handleChange);
      element.remove();
    },
  };
}
